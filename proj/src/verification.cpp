#include "braidchar/verification.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "braidchar/formulas.hpp"
#include "braidchar/koszul.hpp"
#include "braidchar/oracle.hpp"
#include "braidchar/snrep.hpp"
#include "braidchar/symfunc.hpp"

namespace braidchar::verification {

namespace {

std::string poly_string(const std::vector<BigInt>& coeffs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ',';
        out += coeffs[i].get_str();
    }
    return out + "]";
}

template <typename Map>
std::string table_string(const Map& entries)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [lambda, mult] : entries) {
        if (!first)
            out += ", ";
        first = false;
        out += "(" + lambda.to_string() + "):" + mult.get_str();
    }
    return out + "}";
}

std::string tag(Algebra a, int n)
{
    return std::string(algebra_name(a)) + " n=" + std::to_string(n);
}

std::string tag(Algebra a, int n, int k)
{
    return tag(a, n) + " k=" + std::to_string(k);
}

std::vector<Algebra> algebras(const SuiteOptions& o)
{
    if (o.algebra)
        return {*o.algebra};
    return {Algebra::PvbDual, Algebra::PfbDual};
}

struct Range {
    int lo;
    int hi;
};

Range range(const SuiteOptions& o, int lo, int hi)
{
    if (o.n)
        return {*o.n, *o.n};
    return {o.n_min.value_or(lo), o.n_max.value_or(hi)};
}

std::map<Partition, BigInt> integral(const std::map<Partition, Rational>& m, bool& ok)
{
    std::map<Partition, BigInt> out;
    for (const auto& [lambda, c] : m) {
        if (c.get_den() != 1)
            ok = false;
        out.emplace(lambda, c.get_num());
    }
    return out;
}

void hilbert_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    for (auto a : algebras(o)) {
        auto [lo, hi] = range(o, 1, 8);
        for (int n = std::max(lo, 1); n <= hi; ++n) {
            const auto formula = formulas::hilbert(a, n).coeffs;
            const auto counted = oracle::hilbert_series(a, n);
            Check c{"hilbert " + tag(a, n), counted == formula, poly_string(formula)};
            if (!c.pass)
                c.detail = "formula " + poly_string(formula) + " basis count " + poly_string(counted);
            if (c.pass && n <= oracle_hard_limit(a)) {
                const auto traced = oracle::graded_character(a, Permutation::identity(n)).coeffs;
                if (traced != formula) {
                    c.pass = false;
                    c.detail = "identity trace " + poly_string(traced) + " vs formula " + poly_string(formula);
                }
            }
            out.push_back(std::move(c));
            if (a == Algebra::PvbDual)
                out.push_back({"pvb-dual top dimension n! n=" + std::to_string(n), formula.back() == factorial(n),
                               formula.back().get_str()});
        }
    }
}

void characters_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    for (auto a : algebras(o)) {
        auto [lo, hi] = range(o, 1, oracle_default_limit(a));
        for (int n = std::max(lo, 1); n <= hi; ++n) {
            const auto oracle_chars = oracle::all_characters(a, n);
            Check c{"characters " + tag(a, n), true, std::to_string(oracle_chars.size()) + " classes"};
            for (const auto& [mu, ch] : oracle_chars) {
                const auto f = formulas::character(a, n, mu);
                if (f.coeffs != ch.coeffs) {
                    c.pass = false;
                    c.detail = "mu=" + mu.to_string() + " formula " + poly_string(f.coeffs) + " oracle " + poly_string(ch.coeffs);
                    break;
                }
            }
            out.push_back(std::move(c));
        }
    }
}

void decompositions_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    for (auto a : algebras(o)) {
        auto [lo, hi] = range(o, 1, 6);
        for (int n = std::max(lo, 1); n <= hi; ++n) {
            const auto oracle_chars = oracle::all_characters(a, n);
            const auto dims = formulas::hilbert(a, n).coeffs;
            for (int k = 0; k < n; ++k) {
                const auto table = formulas::decompose(a, n, k);
                bool ok = true;
                const auto expected = integral(decompose(oracle::degree_character(oracle_chars, n, k)), ok);
                Check c{"decomposition " + tag(a, n, k), ok && expected == table.entries, table_string(table.entries)};
                BigInt dim = 0;
                for (const auto& [lambda, mult] : table.entries) {
                    if (sgn(mult) < 0)
                        c.pass = false;
                    dim += mult * irreducible_dimension(lambda);
                }
                if (dim != dims[static_cast<std::size_t>(k)])
                    c.pass = false;
                if (!c.pass)
                    c.detail = "plethysm " + table_string(table.entries) + " oracle " + table_string(expected) +
                               " dimension " + dim.get_str() + " expected " + dims[static_cast<std::size_t>(k)].get_str();
                out.push_back(std::move(c));
            }
        }
    }
}

void koszul_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    for (auto a : algebras(o)) {
        auto [lo, hi] = range(o, 1, 5);
        for (int n = std::max(lo, 1); n <= hi; ++n) {
            const auto identity = koszul::dual_character(a, n, Partition::ones(n), o.trunc);
            Check c{"koszul identity " + tag(a, n), true, "trunc " + std::to_string(o.trunc)};
            for (const auto& mu : partitions(n)) {
                const auto check = koszul::verify_identity(a, n, mu, o.trunc);
                if (!check.ok) {
                    c.pass = false;
                    c.detail = "mu=" + mu.to_string() + " residual " + check.residual.get_str() + " at z^" +
                               std::to_string(*check.residual_degree);
                    break;
                }
                const auto series = koszul::dual_character(a, n, mu, o.trunc);
                for (int i = 0; i <= o.trunc; ++i) {
                    const auto idx = static_cast<std::size_t>(i);
                    if (abs(series[idx]) > identity[idx]) {
                        c.pass = false;
                        c.detail = "mu=" + mu.to_string() + " |trace| exceeds dimension at z^" + std::to_string(i);
                        break;
                    }
                }
                if (!c.pass)
                    break;
            }
            out.push_back(std::move(c));

            bool graded_dimension = identity.is_integral();
            for (const auto& q : identity.coeffs())
                graded_dimension = graded_dimension && sgn(q) >= 0;
            out.push_back({"koszul dimensions non-negative integers " + tag(a, n), graded_dimension, ""});
        }
    }
}

void multiplicities_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    auto [lo, hi] = range(o, 2, 7);
    const auto gf = formulas::no_repeated_odd_generating_function(hi);
    Check trivial_pvb{"pvb trivial multiplicity equals restricted partition count", true, ""};
    Check trivial_pfb{"pfb trivial multiplicity all zero", true, ""};
    Check alternating{"alternating equal & vanishing", true, ""};
    int checked = 0;
    for (int n = std::max(lo, 2); n <= hi; ++n) {
        const auto pvb = oracle::all_characters(Algebra::PvbDual, n);
        const auto pfb = oracle::all_characters(Algebra::PfbDual, n);
        for (int k = 1; k < n; ++k) {
            ++checked;
            const auto fv = oracle::degree_character(pvb, n, k);
            const auto ff = oracle::degree_character(pfb, n, k);
            const auto triv = multiplicity_trivial(fv);
            const auto count = formulas::trivial_multiplicity_pvb(n, k);
            const auto via_n = formulas::trivial_multiplicity_pvb_via_n(n, k);
            const bool full_range = n < 2 * k || Rational(gf[static_cast<std::size_t>(k)]) == triv;
            if (trivial_pvb.pass && (triv != Rational(count) || count != via_n || !full_range)) {
                trivial_pvb.pass = false;
                trivial_pvb.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " oracle " + triv.get_str() +
                                     " count " + count.get_str() + " via n " + via_n.get_str();
            }
            const auto triv_f = multiplicity_trivial(ff);
            if (trivial_pfb.pass && sgn(triv_f) != 0) {
                trivial_pfb.pass = false;
                trivial_pfb.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " multiplicity " + triv_f.get_str();
            }
            const auto alt_v = multiplicity_alternating(fv);
            const auto alt_f = multiplicity_alternating(ff);
            const bool vanish = n < 2 * (k + 1) || (sgn(alt_v) == 0 && sgn(alt_f) == 0);
            if (alternating.pass && (alt_v != alt_f || !vanish)) {
                alternating.pass = false;
                alternating.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " pvb " + alt_v.get_str() +
                                     " pfb " + alt_f.get_str();
            }
        }
    }
    for (auto* c : {&trivial_pvb, &trivial_pfb, &alternating})
        if (c->pass)
            c->detail = std::to_string(checked) + " (n,k) pairs";
    out.push_back(std::move(trivial_pvb));
    out.push_back(std::move(trivial_pfb));
    out.push_back(std::move(alternating));
}

void constraints_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    auto [lo, hi] = range(o, 2, 7);
    for (int n = std::max(lo, 2); n <= hi; ++n)
        for (int k = 1; k < n; ++k) {
            const auto report = formulas::constraint_checks(n, k);
            Check c{"constraints " + tag(Algebra::PfbDual, n, k), report.ok(), table_string(report.two_row_entries)};
            if (!c.pass) {
                const auto& v = report.violations.front();
                c.detail = "lambda=(" + v.lambda.to_string() + ") " + v.reason;
            }
            out.push_back(std::move(c));
        }
}

void stability_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    struct Case {
        Algebra algebra;
        int k;
        int n_min;
        int n_max;
        int expected_from;
    };
    const int top = o.n_max.value_or(8);
    const std::vector<Case> cases{{Algebra::PvbDual, 1, 2, top, 4},
                                  {Algebra::PfbDual, 1, 2, top, 3},
                                  {Algebra::PvbDual, 2, 5, std::max(top, 9), 0}};
    for (const auto& s : cases) {
        if (o.algebra && *o.algebra != s.algebra)
            continue;
        const auto r = formulas::stability_report(s.algebra, s.k, s.n_min, s.n_max);
        Check c{"stability " + std::string(algebra_name(s.algebra)) + " k=" + std::to_string(s.k) + " n=" +
                    std::to_string(s.n_min) + ".." + std::to_string(s.n_max),
                r.stable_within_range && r.bound_holds && (s.expected_from == 0 || r.stable_from == s.expected_from),
                "stable from n=" + std::to_string(r.stable_from)};
        out.push_back(std::move(c));
    }
}

void top_degree_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    for (auto a : algebras(o)) {
        auto [lo, hi] = range(o, 2, 6);
        for (int n = std::max(lo, 2); n <= hi; ++n) {
            std::map<Partition, Rational> expected;
            if (a == Algebra::PvbDual)
                for (const auto& lambda : partitions(n))
                    expected.emplace(lambda, Rational(irreducible_dimension(lambda)));
            else
                expected.emplace(Partition::ones(n), Rational(1));
            const auto got = oracle::top_degree_report(a, n);
            Check c{"top degree " + tag(a, n), got == expected, a == Algebra::PvbDual ? "regular" : "alternating"};
            if (!c.pass) {
                bool ok = true;
                c.detail = "got " + table_string(integral(got, ok));
            }
            out.push_back(std::move(c));
        }
    }
}

void plethysm_suite(const SuiteOptions& o, std::vector<Check>& out)
{
    const int lo = o.n_min.value_or(2);
    const int hi = o.n_max.value_or(5);
    for (int k = lo; k <= hi; ++k) {
        const auto schur = to_schur(plethysm(SymFunc::elementary(k), SymFunc::elementary(2)));
        std::map<Partition, Rational> expected;
        for (const auto& pi : formulas::elementary_of_e2_support(k))
            expected.emplace(pi, Rational(1));
        bool ok = true;
        Check c{"e_" + std::to_string(k) + "[e_2] Frobenius form", schur == expected, table_string(integral(schur, ok))};
        out.push_back(std::move(c));
    }
}

using SuiteFn = void (*)(const SuiteOptions&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"hilbert", hilbert_suite},
        {"characters", characters_suite},
        {"decompositions", decompositions_suite},
        {"koszul", koszul_suite},
        {"multiplicities", multiplicities_suite},
        {"stability", stability_suite},
        {"constraints", constraints_suite},
        {"top-degree", top_degree_suite},
        {"plethysm", plethysm_suite},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry())
            v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& options)
{
    std::vector<Check> out;
    for (const auto& [name, fn] : registry())
        if (suite == "all" || suite == name)
            fn(options, out);
    if (out.empty() && suite != "all" &&
        std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + std::string(suite));
    return out;
}

int oracle_default_limit(Algebra algebra)
{
    return algebra == Algebra::PvbDual ? 6 : 7;
}

int oracle_hard_limit(Algebra algebra)
{
    return algebra == Algebra::PvbDual ? 8 : 9;
}

} // namespace braidchar::verification
