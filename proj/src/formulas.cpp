#include "braidchar/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "braidchar/parallel.hpp"
#include "braidchar/snrep.hpp"

namespace braidchar::formulas {

namespace {

void require_n(int n, const char* what)
{
    if (n < 1)
        throw std::out_of_range(std::string(what) + ": requires n >= 1");
}

void require_mu(int n, const Partition& mu, const char* what)
{
    require_n(n, what);
    if (mu.size() != n)
        throw std::invalid_argument(std::string(what) + ": mu must partition n");
}

std::vector<BigInt> pad(std::vector<BigInt> coeffs, int n)
{
    coeffs.resize(static_cast<std::size_t>(n), BigInt(0));
    return coeffs;
}

BigInt pow_int(int base, int exp)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

int sign_of(int exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

} // namespace

GradedCharacter hilbert(Algebra algebra, int n)
{
    require_n(n, "hilbert");
    GradedCharacter ch{n, Partition::ones(n), {}};
    for (int k = 0; k < n; ++k)
        ch.coeffs.push_back(algebra == Algebra::PvbDual ? lah(n, n - k) : stirling2(n, n - k));
    return ch;
}

GradedCharacter char_pvb(int n, const Partition& mu)
{
    require_mu(n, mu, "char_pvb");
    std::vector<BigInt> total{BigInt(1)};
    const auto mult = mu.multiplicities();
    for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
        const int alpha = mult[static_cast<std::size_t>(k)];
        if (alpha == 0)
            continue;
        std::vector<BigInt> factor(static_cast<std::size_t>(alpha * k) + 1, BigInt(0));
        for (int beta = 0; beta <= alpha; ++beta) {
            const int j = alpha - beta;
            BigInt term = lah(alpha, beta) * pow_int(k, j);
            if (sign_of(j * (k - 1)) < 0)
                term = -term;
            factor[static_cast<std::size_t>(j * k)] += term;
        }
        total = poly_multiply(total, factor);
    }
    return {n, mu, pad(std::move(total), n)};
}

GradedCharacter char_pfb(int n, const Partition& mu)
{
    require_mu(n, mu, "char_pfb");
    const std::vector<int> cycles(mu.parts().begin(), mu.parts().end());
    const int count = static_cast<int>(cycles.size());

    // Factor contributed by one part S_i of the cycle set, keyed by bitmask.
    std::unordered_map<unsigned, std::vector<BigInt>> factors;
    auto factor_of = [&](const std::vector<int>& part) -> const std::vector<BigInt>& {
        unsigned mask = 0;
        for (int c : part)
            mask |= 1u << c;
        if (auto it = factors.find(mask); it != factors.end())
            return it->second;
        int g = 0;
        int total_len = 0;
        for (int c : part) {
            g = std::gcd(g, cycles[static_cast<std::size_t>(c)]);
            total_len += cycles[static_cast<std::size_t>(c)];
        }
        const int size = static_cast<int>(part.size());
        std::vector<BigInt> poly(static_cast<std::size_t>(total_len), BigInt(0));
        for (int k = 1; k <= g; ++k) {
            if (g % k)
                continue;
            int d_sum = 0;
            int excess = 0;
            for (int c : part) {
                const int d = cycles[static_cast<std::size_t>(c)] / k;
                d_sum += d;
                excess += d - 1;
            }
            BigInt term = pow_int(k, size - 1);
            if (sign_of((k - 1) * (d_sum - 1) + excess) < 0)
                term = -term;
            poly[static_cast<std::size_t>(k * (d_sum - 1))] += term;
        }
        return factors.emplace(mask, std::move(poly)).first->second;
    };

    std::vector<int> items(static_cast<std::size_t>(count));
    std::iota(items.begin(), items.end(), 0);
    std::vector<BigInt> total(static_cast<std::size_t>(n), BigInt(0));
    for (const auto& blocks : SetPartitions(items)) {
        std::vector<BigInt> product{BigInt(1)};
        for (const auto& part : blocks)
            product = poly_multiply(product, factor_of(part));
        for (std::size_t i = 0; i < product.size(); ++i) {
            if (sgn(product[i]) == 0)
                continue;
            if (i >= total.size())
                throw std::logic_error("char_pfb: degree exceeds n - 1");
            total[i] += product[i];
        }
    }
    return {n, mu, std::move(total)};
}

GradedCharacter character(Algebra algebra, int n, const Partition& mu)
{
    return algebra == Algebra::PvbDual ? char_pvb(n, mu) : char_pfb(n, mu);
}

SymFunc characteristic(Algebra algebra, int n, int k)
{
    require_n(n, "characteristic");
    if (k < 0 || k > n - 1)
        throw std::out_of_range("characteristic: requires 0 <= k <= n-1");

    SymFunc total(n);
    PartitionConstraints shape;
    shape.max_length = n - k;
    for (const auto& a_bar : partitions(k, shape)) {
        SymFunc term = SymFunc::one();
        const auto mult = a_bar.multiplicities();
        for (int t = 1; t < static_cast<int>(mult.size()); ++t) {
            const int a_t = mult[static_cast<std::size_t>(t)];
            if (a_t == 0)
                continue;
            const SymFunc outer = t % 2 ? SymFunc::elementary(a_t) : SymFunc::homogeneous(a_t);
            const SymFunc inner = algebra == Algebra::PvbDual ? ch_regular(t + 1) : SymFunc::elementary(t + 1);
            term = term * plethysm(outer, inner);
        }
        term = term * SymFunc::homogeneous(n - k - a_bar.length());
        total += term;
    }
    return total;
}

DecompositionTable decompose(Algebra algebra, int n, int k)
{
    DecompositionTable table{n, k, {}};
    for (const auto& [lambda, c] : to_schur(characteristic(algebra, n, k))) {
        if (c.get_den() != 1)
            throw std::domain_error("decompose: non-integral multiplicity at " + lambda.to_string());
        table.entries.emplace(lambda, c.get_num());
    }
    return table;
}

BigInt trivial_multiplicity_pvb(int n, int k)
{
    if (k < 1 || n <= k)
        throw std::out_of_range("trivial_multiplicity_pvb: requires n > k >= 1");
    PartitionConstraints c;
    c.max_length = n - k;
    c.no_repeated_odd = true;
    return BigInt(static_cast<long>(partitions(k, c).size()));
}

BigInt trivial_multiplicity_pvb_via_n(int n, int k)
{
    if (k < 1 || n <= k)
        throw std::out_of_range("trivial_multiplicity_pvb_via_n: requires n > k >= 1");
    PartitionConstraints c;
    c.exact_length = n - k;
    c.no_repeated_even = true;
    return BigInt(static_cast<long>(partitions(n, c).size()));
}

std::vector<BigInt> no_repeated_odd_generating_function(int max_degree)
{
    if (max_degree < 0)
        return {};
    const auto len = static_cast<std::size_t>(max_degree) + 1;
    std::vector<BigInt> series(len, BigInt(0));
    series[0] = 1;
    for (int j = 1; j <= max_degree; ++j) {
        const auto step = static_cast<std::size_t>(j);
        if (j % 2) {
            // times (1 + z^j), descending so each factor is used once
            for (std::size_t i = len - 1; i >= step; --i)
                series[i] += series[i - step];
        } else {
            // divide by (1 - z^j)
            for (std::size_t i = step; i < len; ++i)
                series[i] += series[i - step];
        }
    }
    return series;
}

std::vector<Partition> elementary_of_e2_support(int k)
{
    if (k < 0)
        throw std::out_of_range("elementary_of_e2_support: requires k >= 0");
    PartitionConstraints distinct;
    distinct.no_repeated_odd = true;
    distinct.no_repeated_even = true;
    std::vector<Partition> out;
    for (const auto& gamma : partitions(k, distinct)) {
        std::vector<int> arms;
        std::vector<int> legs;
        for (int g : gamma.parts()) {
            arms.push_back(g - 1);
            legs.push_back(g);
        }
        out.push_back(Partition::from_frobenius(arms, legs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConstraintReport constraint_checks(const DecompositionTable& pfb_table)
{
    const int n = pfb_table.n;
    const int k = pfb_table.degree;
    ConstraintReport report{n, k, {}, {}};
    for (const auto& [lambda, mult] : pfb_table.entries) {
        if (sgn(mult) == 0)
            continue;
        const int weight = n - lambda.largest();
        if (weight < k)
            report.violations.push_back({lambda, n, k, "n - lambda_0 = " + std::to_string(weight) + " is below the degree"});
        if (lambda.length() == 2) {
            report.two_row_entries.emplace(lambda, mult);
            const bool allowed = k == 1 && lambda[1] == 1 && mult == 1;
            if (!allowed)
                report.violations.push_back({lambda, n, k, "two-row irreducible with multiplicity " + mult.get_str()});
        }
    }
    return report;
}

ConstraintReport constraint_checks(int n, int k)
{
    return constraint_checks(decompose_pfb(n, k));
}

StabilityReport stability_report(Algebra algebra, int k, const std::vector<DecompositionTable>& tables)
{
    if (tables.empty())
        throw std::invalid_argument("stability_report: no tables");
    StabilityReport report;
    report.algebra = algebra;
    report.k = k;
    report.n_min = tables.front().n;
    report.n_max = tables.back().n;
    for (std::size_t i = 0; i < tables.size(); ++i)
        if (tables[i].n != report.n_min + static_cast<int>(i) || tables[i].degree != k)
            throw std::invalid_argument("stability_report: tables must be degree k at consecutive n");

    std::map<std::string, std::vector<int>> tails;
    for (const auto& table : tables)
        for (const auto& [lambda, mult] : table.entries)
            if (sgn(mult) != 0) {
                auto tail = lambda.tail();
                std::vector<int> parts(tail.parts().begin(), tail.parts().end());
                tails.emplace(church_farb_string(parts), std::move(parts));
            }

    for (const auto& [label, tail] : tails) {
        auto& trajectory = report.trajectories[label];
        for (const auto& table : tables) {
            auto lambda = from_church_farb(table.n, tail);
            if (!lambda) {
                trajectory[table.n] = std::nullopt;
                continue;
            }
            auto it = table.entries.find(*lambda);
            trajectory[table.n] = it == table.entries.end() ? BigInt(0) : it->second;
        }
    }

    auto value = [&](const Trajectory& t, int n) -> BigInt {
        const auto& v = t.at(n);
        return v ? *v : BigInt(0);
    };
    report.stable_from = report.n_max;
    for (int n = report.n_max - 1; n >= report.n_min; --n) {
        bool same = true;
        for (const auto& [label, t] : report.trajectories)
            if (value(t, n) != value(t, report.n_max)) {
                same = false;
                break;
            }
        if (!same)
            break;
        report.stable_from = n;
    }
    report.stable_within_range = report.stable_from < report.n_max;
    report.guaranteed_from = std::max(4 * k, report.n_min);
    report.bound_holds = report.stable_from <= report.guaranteed_from;
    return report;
}

StabilityReport stability_report(Algebra algebra, int k, int n_min, int n_max)
{
    if (k < 1 || n_min <= k || n_max < n_min)
        throw std::out_of_range("stability_report: requires 1 <= k < n_min <= n_max");
    std::vector<DecompositionTable> tables(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(tables.size(), [&](std::size_t i) {
        tables[i] = decompose(algebra, n_min + static_cast<int>(i), k);
    });
    return stability_report(algebra, k, tables);
}

} // namespace braidchar::formulas
