#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidchar/formulas.hpp"
#include "braidchar/koszul.hpp"
#include "braidchar/oracle.hpp"
#include "braidchar/snrep.hpp"
#include "braidchar/verification.hpp"

namespace braidchar::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numbers that fit in 64 bits stay numbers; larger ones become strings.
Json number(const BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Json number_array(const std::vector<BigInt>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(number(x));
    return out;
}

std::string method_name(Method m)
{
    switch (m) {
    case Method::Formula:
        return "formula";
    case Method::Oracle:
        return "oracle";
    case Method::Both:
        return "both";
    }
    return "";
}

/// Machine-readable result: a JSON document and the same numbers as a table.
struct Report {
    Json doc = Json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int exit_code = exit_ok;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string scalar_text(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit(const Report& report, OutputFormat format, std::ostream& out)
{
    switch (format) {
    case OutputFormat::Json:
        out << report.doc.dump() << '\n';
        return;
    case OutputFormat::Csv:
        for (const auto& [key, value] : report.doc.items())
            if (value.is_primitive())
                out << "# " << key << '=' << scalar_text(value) << '\n';
        for (std::size_t i = 0; i < report.header.size(); ++i)
            out << (i ? "," : "") << csv_field(report.header[i]);
        out << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        return;
    case OutputFormat::Text: {
        for (const auto& [key, value] : report.doc.items())
            if (value.is_primitive())
                out << key << ": " << scalar_text(value) << '\n';
        std::vector<std::size_t> width(report.header.size(), 0);
        for (std::size_t i = 0; i < report.header.size(); ++i)
            width[i] = report.header[i].size();
        for (const auto& row : report.rows)
            for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "  " : "");
                if (i + 1 < cells.size())
                    out << std::left << std::setw(static_cast<int>(width[i]));
                out << cells[i];
            }
            out << '\n';
        };
        if (!report.rows.empty()) {
            line(report.header);
            for (const auto& row : report.rows)
                line(row);
        }
        return;
    }
    }
}

// ---- configuration ---------------------------------------------------------

bool oracle_feasible_by_default(Algebra a, int n)
{
    return n <= verification::oracle_default_limit(a);
}

Method resolve_method(const RunConfig& cfg, Report& report)
{
    const Algebra a = *cfg.algebra;
    const int n = *cfg.n;
    if (cfg.method) {
        if (*cfg.method != Method::Formula && n > verification::oracle_hard_limit(a))
            throw UsageError("oracle not available for " + std::string(algebra_name(a)) + " at n=" + std::to_string(n) +
                             " (limit " + std::to_string(verification::oracle_hard_limit(a)) + ")");
        return *cfg.method;
    }
    if (oracle_feasible_by_default(a, n))
        return Method::Both;
    report.doc["warning"] = "oracle skipped above n=" + std::to_string(verification::oracle_default_limit(a)) +
                            "; formula only";
    return Method::Formula;
}

void require_algebra_and_n(const RunConfig& cfg)
{
    if (!cfg.algebra)
        throw UsageError("--algebra is required");
    if (!cfg.n)
        throw UsageError("--n is required");
}

Partition require_class(const RunConfig& cfg)
{
    if (cfg.sigma)
        return cfg.sigma->cycle_type();
    if (cfg.cycle_type)
        return *cfg.cycle_type;
    throw UsageError("--cycle-type or --sigma is required");
}

void header(Report& report, const RunConfig& cfg)
{
    report.doc["command"] = cfg.command;
    if (cfg.algebra)
        report.doc["algebra"] = std::string(algebra_name(*cfg.algebra));
    if (cfg.n)
        report.doc["n"] = *cfg.n;
}

void fill_series_rows(Report& report, const std::vector<BigInt>& primary, const std::vector<BigInt>* oracle)
{
    report.header = {"degree", "coeff"};
    if (oracle)
        report.header.push_back("oracle");
    const auto len = std::max(primary.size(), oracle ? oracle->size() : 0);
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<std::string> row{std::to_string(k), k < primary.size() ? primary[k].get_str() : ""};
        if (oracle)
            row.push_back(k < oracle->size() ? (*oracle)[k].get_str() : "");
        report.rows.push_back(std::move(row));
    }
}

// ---- commands --------------------------------------------------------------

Report cmd_hilbert(const RunConfig& cfg)
{
    require_algebra_and_n(cfg);
    Report report;
    header(report, cfg);
    const auto method = resolve_method(cfg, report);
    report.doc["method"] = method_name(method);

    std::vector<BigInt> formula;
    std::vector<BigInt> counted;
    if (method != Method::Oracle)
        formula = formulas::hilbert(*cfg.algebra, *cfg.n).coeffs;
    if (method != Method::Formula)
        counted = oracle::hilbert_series(*cfg.algebra, *cfg.n);

    const auto& primary = method == Method::Oracle ? counted : formula;
    report.doc["coeffs"] = number_array(primary);
    if (method == Method::Both) {
        report.doc["oracle"] = number_array(counted);
        report.doc["match"] = formula == counted;
        if (formula != counted)
            report.exit_code = exit_mismatch;
    }
    fill_series_rows(report, primary, method == Method::Both ? &counted : nullptr);
    return report;
}

Report cmd_character(const RunConfig& cfg)
{
    require_algebra_and_n(cfg);
    const Partition mu = require_class(cfg);
    Report report;
    header(report, cfg);
    report.doc["mu"] = mu.to_string();
    if (cfg.sigma)
        report.doc["sigma"] = cfg.sigma->to_cycle_string();
    const auto method = resolve_method(cfg, report);
    report.doc["method"] = method_name(method);

    std::vector<BigInt> formula;
    std::vector<BigInt> traced;
    if (method != Method::Oracle)
        formula = formulas::character(*cfg.algebra, *cfg.n, mu).coeffs;
    if (method != Method::Formula)
        traced = cfg.sigma ? oracle::graded_character(*cfg.algebra, *cfg.sigma).coeffs
                           : oracle::graded_character(*cfg.algebra, *cfg.n, mu).coeffs;

    const auto& primary = method == Method::Oracle ? traced : formula;
    report.doc["coeffs"] = number_array(primary);
    if (method == Method::Both) {
        report.doc["oracle"] = number_array(traced);
        report.doc["match"] = formula == traced;
        if (formula != traced)
            report.exit_code = exit_mismatch;
    }
    fill_series_rows(report, primary, method == Method::Both ? &traced : nullptr);
    return report;
}

struct LabelledEntry {
    std::vector<int> tail;
    Partition lambda;
    BigInt multiplicity;
};

std::vector<LabelledEntry> labelled(const std::map<Partition, BigInt>& entries)
{
    std::vector<LabelledEntry> out;
    for (const auto& [lambda, mult] : entries) {
        if (sgn(mult) == 0)
            continue;
        auto tail = lambda.tail();
        out.push_back({std::vector<int>(tail.parts().begin(), tail.parts().end()), lambda, mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tail < b.tail; });
    return out;
}

Json entries_json(const std::vector<LabelledEntry>& entries)
{
    Json out = Json::array();
    for (const auto& e : entries)
        out.push_back(Json{{"partition", e.lambda.to_string()},
                           {"label", church_farb_string(e.tail)},
                           {"multiplicity", number(e.multiplicity)}});
    return out;
}

std::string summary(const std::vector<LabelledEntry>& entries)
{
    if (entries.empty())
        return "0";
    std::string out;
    for (const auto& e : entries) {
        if (!out.empty())
            out += '+';
        if (e.multiplicity != 1)
            out += e.multiplicity.get_str();
        out += church_farb_string(e.tail);
    }
    return out;
}

Report cmd_decompose(const RunConfig& cfg)
{
    require_algebra_and_n(cfg);
    if (!cfg.degree)
        throw UsageError("--k is required");
    const int n = *cfg.n;
    const int k = *cfg.degree;
    if (k < 0 || k > n - 1)
        throw UsageError("--k must lie in 0..n-1");
    Report report;
    header(report, cfg);
    report.doc["k"] = k;
    const auto method = resolve_method(cfg, report);
    report.doc["method"] = method_name(method);

    std::map<Partition, BigInt> formula;
    std::map<Partition, BigInt> traced;
    if (method != Method::Oracle)
        formula = formulas::decompose(*cfg.algebra, n, k).entries;
    if (method != Method::Formula)
        for (const auto& [lambda, c] : decompose(oracle::degree_character(*cfg.algebra, n, k))) {
            if (c.get_den() != 1)
                throw std::domain_error("oracle decomposition has a non-integral multiplicity at " + lambda.to_string());
            traced.emplace(lambda, c.get_num());
        }

    const auto primary = labelled(method == Method::Oracle ? traced : formula);
    report.doc["summary"] = summary(primary);
    report.doc["entries"] = entries_json(primary);
    report.header = {"partition", "label", "multiplicity"};
    for (const auto& e : primary)
        report.rows.push_back({e.lambda.to_string(), church_farb_string(e.tail), e.multiplicity.get_str()});
    if (method == Method::Both) {
        report.doc["oracle_entries"] = entries_json(labelled(traced));
        report.doc["match"] = formula == traced;
        if (formula != traced)
            report.exit_code = exit_mismatch;
        report.header.push_back("oracle");
        for (auto& row : report.rows) {
            auto it = traced.find(Partition::parse(row[0]));
            row.push_back(it == traced.end() ? "0" : it->second.get_str());
        }
    }
    return report;
}

Report cmd_series(const RunConfig& cfg)
{
    require_algebra_and_n(cfg);
    const Partition mu = require_class(cfg);
    Report report;
    header(report, cfg);
    report.doc["mu"] = mu.to_string();
    report.doc["trunc"] = cfg.trunc;
    const auto series = koszul::dual_character(*cfg.algebra, *cfg.n, mu, cfg.trunc);
    Json coeffs = Json::array();
    report.header = {"degree", "coeff"};
    for (std::size_t i = 0; i < series.coeffs().size(); ++i) {
        coeffs.push_back(series[i].get_str());
        report.rows.push_back({std::to_string(i), series[i].get_str()});
    }
    report.doc["integral"] = series.is_integral();
    const auto check = koszul::verify_identity(*cfg.algebra, *cfg.n, mu, cfg.trunc);
    report.doc["identity_ok"] = check.ok;
    if (!check.ok) {
        report.doc["residual_degree"] = *check.residual_degree;
        report.doc["residual"] = check.residual.get_str();
        report.exit_code = exit_mismatch;
    }
    report.doc["coeffs"] = std::move(coeffs);
    return report;
}

Report cmd_verify(const RunConfig& cfg)
{
    const auto& names = verification::suite_names();
    if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw UsageError("unknown suite '" + cfg.suite + "'");
    verification::SuiteOptions options;
    options.algebra = cfg.algebra;
    options.n = cfg.n;
    options.n_min = cfg.n_min;
    options.n_max = cfg.n_max;
    options.trunc = cfg.trunc;

    Report report;
    report.doc["command"] = cfg.command;
    report.doc["suite"] = cfg.suite;
    const auto checks = verification::run_suite(cfg.suite, options);
    bool all_pass = true;
    Json list = Json::array();
    report.header = {"check", "pass", "detail"};
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        report.rows.push_back({c.name, c.pass ? "true" : "false", c.detail});
    }
    report.doc["pass"] = all_pass;
    report.doc["count"] = checks.size();
    report.doc["checks"] = std::move(list);
    report.exit_code = all_pass ? exit_ok : exit_mismatch;
    return report;
}

// ---- argument parsing ------------------------------------------------------

struct RawOptions {
    std::string algebra;
    int n = 0;
    int k = 0;
    std::string cycle_type;
    std::string sigma;
    std::string method;
    int trunc = 12;
    std::string output = "json";
    std::string out_path;
    std::string suite = "all";
    int n_min = 0;
    int n_max = 0;
};

struct Bound {
    CLI::Option* algebra = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* k = nullptr;
    CLI::Option* cycle_type = nullptr;
    CLI::Option* sigma = nullptr;
    CLI::Option* method = nullptr;
    CLI::Option* out_path = nullptr;
    CLI::Option* n_min = nullptr;
    CLI::Option* n_max = nullptr;
};

Bound add_options(CLI::App& sub, RawOptions& raw, bool verify)
{
    Bound b;
    b.algebra = sub.add_option("--algebra", raw.algebra, "pvb-dual or pfb-dual");
    b.n = sub.add_option("--n", raw.n, "Number of strands");
    if (!verify) {
        b.k = sub.add_option("--k,--degree", raw.k, "Cohomological degree");
        b.cycle_type = sub.add_option("--cycle-type", raw.cycle_type, "Cycle type, e.g. 2,2");
        b.sigma = sub.add_option("--sigma", raw.sigma, "Permutation, e.g. \"(1 2)(3 4)\"");
        b.method = sub.add_option("--method", raw.method, "formula, oracle or both");
    } else {
        sub.add_option("--suite", raw.suite, "Suite name or all");
        b.n_min = sub.add_option("--n-min", raw.n_min, "Smallest n");
        b.n_max = sub.add_option("--n-max", raw.n_max, "Largest n");
    }
    sub.add_option("--trunc", raw.trunc, "Series truncation degree");
    sub.add_option("--output", raw.output, "json, csv or text");
    b.out_path = sub.add_option("--out", raw.out_path, "Write the report to this file");
    return b;
}

RunConfig to_config(const std::string& command, const RawOptions& raw, const Bound& b)
{
    RunConfig cfg;
    cfg.command = command;
    try {
        if (b.algebra->count())
            cfg.algebra = parse_algebra(raw.algebra);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (b.n->count()) {
        if (raw.n < 1)
            throw UsageError("--n must be >= 1");
        cfg.n = raw.n;
    }
    if (b.k && b.k->count())
        cfg.degree = raw.k;
    if (b.cycle_type && b.cycle_type->count()) {
        try {
            cfg.cycle_type = Partition::parse(raw.cycle_type);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --cycle-type: ") + e.what());
        }
    }
    if (b.sigma && b.sigma->count()) {
        if (cfg.cycle_type)
            throw UsageError("give either --cycle-type or --sigma, not both");
        try {
            cfg.sigma = Permutation::parse(raw.sigma, cfg.n.value_or(0));
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --sigma: ") + e.what());
        }
        if (!cfg.n)
            cfg.n = cfg.sigma->size();
        if (cfg.sigma->size() != *cfg.n)
            throw UsageError("--sigma does not act on n points");
    }
    if (cfg.cycle_type && cfg.n && cfg.cycle_type->size() != *cfg.n)
        throw UsageError("--cycle-type must partition n");
    if (b.method && b.method->count()) {
        if (raw.method == "formula")
            cfg.method = Method::Formula;
        else if (raw.method == "oracle")
            cfg.method = Method::Oracle;
        else if (raw.method == "both")
            cfg.method = Method::Both;
        else
            throw UsageError("--method must be formula, oracle or both");
    }
    if (raw.trunc < 0)
        throw UsageError("--trunc must be >= 0");
    cfg.trunc = raw.trunc;
    if (raw.output == "json")
        cfg.output = OutputFormat::Json;
    else if (raw.output == "csv")
        cfg.output = OutputFormat::Csv;
    else if (raw.output == "text")
        cfg.output = OutputFormat::Text;
    else
        throw UsageError("--output must be json, csv or text");
    if (b.out_path->count())
        cfg.out_path = raw.out_path;
    cfg.suite = raw.suite;
    if (b.n_min && b.n_min->count())
        cfg.n_min = raw.n_min;
    if (b.n_max && b.n_max->count())
        cfg.n_max = raw.n_max;
    if (cfg.n_min && cfg.n_max && *cfg.n_min > *cfg.n_max)
        throw UsageError("--n-min exceeds --n-max");
    return cfg;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graded S_n-characters of the cohomology of pure virtual and pure flat braid groups", "braidchar"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands{
        {"hilbert", "Graded dimensions"},
        {"character", "Graded character at one conjugacy class"},
        {"decompose", "Irreducible decomposition of one degree"},
        {"verify", "Run cross-validation suites"},
        {"series", "Graded character of the Koszul dual via the Koszul formula"},
    };
    std::map<std::string, RawOptions> raw;
    std::map<std::string, Bound> bound;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        subs[name] = sub;
        bound[name] = add_options(*sub, raw[name], name == "verify");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed())
            command = name;

    try {
        const RunConfig cfg = to_config(command, raw[command], bound[command]);
        Report report;
        if (command == "hilbert")
            report = cmd_hilbert(cfg);
        else if (command == "character")
            report = cmd_character(cfg);
        else if (command == "decompose")
            report = cmd_decompose(cfg);
        else if (command == "series")
            report = cmd_series(cfg);
        else
            report = cmd_verify(cfg);

        if (cfg.out_path) {
            std::ofstream file(*cfg.out_path, std::ios::binary);
            if (!file)
                throw UsageError("cannot open " + *cfg.out_path);
            emit(report, cfg.output, file);
        } else {
            emit(report, cfg.output, out);
        }
        return report.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace braidchar::cli
