#include <doctest.h>

#include <functional>

#include "braidchar/formulas.hpp"
#include "braidchar/oracle.hpp"
#include "braidchar/snrep.hpp"

using namespace braidchar;
using formulas::DecompositionTable;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v)
{
    std::vector<BigInt> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

std::map<Partition, BigInt> table_of(std::initializer_list<std::pair<std::vector<int>, long>> tail_mults, int n)
{
    std::map<Partition, BigInt> out;
    for (const auto& [tail, m] : tail_mults)
        out.emplace(*from_church_farb(n, tail), BigInt(m));
    return out;
}

// Partitions of k with no odd part repeated and at most max_len parts,
// counted by a direct recursion over part sizes.
long no_repeated_odd(int k, int largest, int max_len)
{
    if (k == 0)
        return 1;
    if (max_len == 0)
        return 0;
    long total = 0;
    for (int p = std::min(k, largest); p >= 1; --p) {
        // p used m times, next parts strictly smaller
        for (int m = 1; m * p <= k && m <= max_len; ++m) {
            if (p % 2 == 1 && m > 1)
                break;
            total += no_repeated_odd(k - m * p, p - 1, max_len - m);
        }
    }
    return total;
}

std::map<Partition, BigInt> oracle_table(Algebra a, int n, int k)
{
    std::map<Partition, BigInt> out;
    for (const auto& [lambda, c] : decompose(oracle::degree_character(a, n, k))) {
        REQUIRE(c.get_den() == 1);
        out.emplace(lambda, c.get_num());
    }
    return out;
}

} // namespace

TEST_CASE("Hilbert series")
{
    CHECK(formulas::hilbert(Algebra::PvbDual, 4).coeffs == ints({1, 12, 36, 24}));
    CHECK(formulas::hilbert(Algebra::PfbDual, 3).coeffs == ints({1, 3, 1}));
    CHECK(formulas::hilbert(Algebra::PvbDual, 1).coeffs == ints({1}));
    CHECK(formulas::hilbert(Algebra::PvbDual, 4).mu == Partition::ones(4));
    for (int n = 1; n <= 10; ++n)
        CHECK(formulas::hilbert(Algebra::PvbDual, n).coeffs.back() == factorial(n));
    CHECK_THROWS(formulas::hilbert(Algebra::PfbDual, 0));
}

TEST_CASE("pvb character examples")
{
    CHECK(formulas::char_pvb(2, Partition{2}).coeffs == ints({1, 0}));
    CHECK(formulas::char_pvb(4, Partition{2, 2}).coeffs == ints({1, 0, -4, 0}));
    CHECK(formulas::char_pvb(4, Partition{1, 1, 1, 1}).coeffs == ints({1, 12, 36, 24}));
    CHECK_THROWS(formulas::char_pvb(4, Partition{2, 1}));
}

TEST_CASE("pfb character examples")
{
    CHECK(formulas::char_pfb(2, Partition{2}).coeffs == ints({1, -1}));
    CHECK(formulas::char_pfb(4, Partition{2, 2}).coeffs == ints({1, -2, -1, 1}));
    for (int n = 2; n <= 6; ++n) {
        std::vector<BigInt> expected;
        for (int k = 0; k < n; ++k)
            expected.push_back(stirling2(n, n - k));
        CHECK(formulas::char_pfb(n, Partition::ones(n)).coeffs == expected);
    }
}

TEST_CASE("pvb product form equals the substitution form")
{
    // pvb!_alpha(w) = sum_j L(alpha, alpha - j) w^j at w = (-1)^{k-1} k z^k
    for (int n = 1; n <= 10; ++n)
        for (const auto& mu : partitions(n)) {
            std::vector<BigInt> total{BigInt(1)};
            const auto m = mu.multiplicities();
            for (int k = 1; k < static_cast<int>(m.size()); ++k) {
                const int alpha = m[static_cast<std::size_t>(k)];
                if (!alpha)
                    continue;
                std::vector<BigInt> factor(static_cast<std::size_t>(alpha * k) + 1, BigInt(0));
                BigInt w = (k % 2 ? 1 : -1) * k;
                BigInt power = 1;
                for (int j = 0; j <= alpha; ++j) {
                    factor[static_cast<std::size_t>(j * k)] = lah(alpha, alpha - j) * power;
                    power *= w;
                }
                total = poly_multiply(total, factor);
            }
            total.resize(static_cast<std::size_t>(n), BigInt(0));
            CHECK(formulas::char_pvb(n, mu).coeffs == total);
        }
}

TEST_CASE("closed forms agree with the oracle")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& [mu, ch] : oracle::all_characters(Algebra::PvbDual, n))
            CHECK(formulas::char_pvb(n, mu).coeffs == ch.coeffs);
    for (int n = 1; n <= 7; ++n)
        for (const auto& [mu, ch] : oracle::all_characters(Algebra::PfbDual, n))
            CHECK(formulas::char_pfb(n, mu).coeffs == ch.coeffs);
}

TEST_CASE("characters at the identity are the Hilbert series")
{
    for (auto a : {Algebra::PvbDual, Algebra::PfbDual})
        for (int n = 1; n <= 8; ++n)
            CHECK(formulas::character(a, n, Partition::ones(n)).coeffs == formulas::hilbert(a, n).coeffs);
}

TEST_CASE("character values are bounded by dimensions")
{
    for (auto a : {Algebra::PvbDual, Algebra::PfbDual})
        for (int n = 1; n <= 8; ++n) {
            const auto dims = formulas::hilbert(a, n).coeffs;
            for (const auto& mu : partitions(n)) {
                const auto ch = formulas::character(a, n, mu);
                CHECK(ch.coeffs[0] == 1);
                for (std::size_t k = 0; k < dims.size(); ++k)
                    CHECK(abs(ch.coeffs[k]) <= dims[k]);
            }
        }
}

TEST_CASE("printed degree one tables")
{
    CHECK(formulas::decompose_pvb(3, 1).entries == table_of({{{}, 1}, {{1}, 2}, {{1, 1}, 1}}, 3));
    for (int n = 4; n <= 9; ++n)
        CHECK(formulas::decompose_pvb(n, 1).entries == table_of({{{}, 1}, {{1}, 2}, {{1, 1}, 1}, {{2}, 1}}, n));
    CHECK(formulas::decompose_pfb(2, 1).entries == table_of({{{1}, 1}}, 2));
    for (int n = 3; n <= 9; ++n)
        CHECK(formulas::decompose_pfb(n, 1).entries == table_of({{{1}, 1}, {{1, 1}, 1}}, n));
}

TEST_CASE("degree zero is the trivial representation")
{
    for (auto a : {Algebra::PvbDual, Algebra::PfbDual})
        for (int n = 1; n <= 7; ++n)
            CHECK(formulas::decompose(a, n, 0).entries == std::map<Partition, BigInt>{{Partition{n}, BigInt(1)}});
}

TEST_CASE("plethystic tables agree with oracle decompositions")
{
    CHECK(formulas::decompose_pvb(5, 2).entries == oracle_table(Algebra::PvbDual, 5, 2));
    CHECK(formulas::decompose_pfb(6, 2).entries == oracle_table(Algebra::PfbDual, 6, 2));
    for (auto a : {Algebra::PvbDual, Algebra::PfbDual})
        for (int n = 1; n <= 6; ++n) {
            const auto dims = formulas::hilbert(a, n).coeffs;
            for (int k = 0; k < n; ++k) {
                const auto t = formulas::decompose(a, n, k);
                CHECK(t.n == n);
                CHECK(t.degree == k);
                CHECK(t.entries == oracle_table(a, n, k));
                BigInt dim = 0;
                for (const auto& [lambda, m] : t.entries) {
                    CHECK(m > 0);
                    dim += m * irreducible_dimension(lambda);
                }
                CHECK(dim == dims[static_cast<std::size_t>(k)]);
            }
        }
    CHECK_THROWS_AS(formulas::decompose_pvb(3, 3), std::out_of_range);
}

TEST_CASE("tables at n = 7 have non-negative entries summing to the dimension")
{
    for (auto a : {Algebra::PvbDual, Algebra::PfbDual}) {
        const auto dims = formulas::hilbert(a, 7).coeffs;
        for (int k = 0; k < 7; ++k) {
            BigInt dim = 0;
            for (const auto& [lambda, m] : formulas::decompose(a, 7, k).entries) {
                CHECK(m > 0);
                dim += m * irreducible_dimension(lambda);
            }
            CHECK(dim == dims[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("trivial multiplicity of pvb")
{
    for (int n = 2; n <= 9; ++n)
        CHECK(formulas::trivial_multiplicity_pvb(n, 1) == 1);
    for (int n = 4; n <= 9; ++n)
        CHECK(formulas::trivial_multiplicity_pvb(n, 2) == 1);
    // {4}, {3,1} and {2,2}: 3 and 1 are distinct odd parts, each used once
    for (int n = 8; n <= 10; ++n)
        CHECK(formulas::trivial_multiplicity_pvb(n, 4) == 3);
    for (int n = 2; n <= 14; ++n)
        for (int k = 1; k < n; ++k) {
            CHECK(formulas::trivial_multiplicity_pvb(n, k) == no_repeated_odd(k, k, n - k));
            CHECK(formulas::trivial_multiplicity_pvb(n, k) == formulas::trivial_multiplicity_pvb_via_n(n, k));
        }
    CHECK_THROWS_AS(formulas::trivial_multiplicity_pvb(3, 3), std::out_of_range);
    CHECK_THROWS_AS(formulas::trivial_multiplicity_pvb(3, 0), std::out_of_range);
}

TEST_CASE("trivial multiplicity matches the oracle")
{
    for (int n = 2; n <= 7; ++n) {
        const auto chars = oracle::all_characters(Algebra::PvbDual, n);
        for (int k = 1; k < n; ++k)
            CHECK(multiplicity_trivial(oracle::degree_character(chars, n, k)) ==
                  Rational(formulas::trivial_multiplicity_pvb(n, k)));
    }
}

TEST_CASE("no-repeated-odd generating function")
{
    const auto gf = formulas::no_repeated_odd_generating_function(20);
    // 1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16 by direct enumeration
    for (int k = 0; k <= 20; ++k)
        CHECK(gf[static_cast<std::size_t>(k)] == no_repeated_odd(k, k, k));
    CHECK(gf[4] == 3);
    CHECK(formulas::no_repeated_odd_generating_function(-1).empty());
    for (int k = 1; k <= 7; ++k)
        CHECK(formulas::trivial_multiplicity_pvb(2 * k, k) == gf[static_cast<std::size_t>(k)]);
}

TEST_CASE("e_k[e_2] support")
{
    CHECK(formulas::elementary_of_e2_support(2) == std::vector<Partition>{Partition{2, 1, 1}});
    CHECK(formulas::elementary_of_e2_support(3) == std::vector<Partition>{Partition{2, 2, 2}, Partition{3, 1, 1, 1}});
    for (int k = 1; k <= 8; ++k) {
        PartitionConstraints distinct;
        distinct.no_repeated_odd = true;
        distinct.no_repeated_even = true;
        const auto support = formulas::elementary_of_e2_support(k);
        CHECK(support.size() == partitions(k, distinct).size());
        for (const auto& pi : support) {
            CHECK(pi.size() == 2 * k);
            if (k >= 2)
                CHECK(pi.length() >= 3);
        }
    }
}

TEST_CASE("pfb constraint checks")
{
    CHECK(formulas::constraint_checks(5, 2).ok());
    auto r41 = formulas::constraint_checks(4, 1);
    CHECK(r41.ok());
    CHECK(r41.two_row_entries == std::map<Partition, BigInt>{{Partition{3, 1}, BigInt(1)}});
    auto r63 = formulas::constraint_checks(6, 3);
    CHECK(r63.ok());
    for (const auto& [lambda, m] : formulas::decompose_pfb(6, 3).entries)
        CHECK(6 - lambda.largest() >= 3);

    DecompositionTable bad{5, 2, {{Partition{4, 1}, BigInt(1)}, {Partition{3, 2}, BigInt(1)}}};
    auto report = formulas::constraint_checks(bad);
    CHECK_FALSE(report.ok());
    REQUIRE(report.violations.size() >= 2);
    CHECK(report.violations.front().lambda == Partition{3, 2});
    CHECK(report.violations.front().n == 5);
    CHECK(report.violations.front().k == 2);

    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(formulas::constraint_checks(n, k).ok());
}

TEST_CASE("stability reports")
{
    auto pvb1 = formulas::stability_report(Algebra::PvbDual, 1, 2, 8);
    CHECK(pvb1.stable_from == 4);
    CHECK(pvb1.stable_within_range);
    CHECK(pvb1.bound_holds);
    CHECK(pvb1.trajectories.size() == 4);
    CHECK(*pvb1.trajectories.at("V(1)").at(3) == 2);
    CHECK(*pvb1.trajectories.at("V(1)").at(2) == 1);
    CHECK_FALSE(pvb1.trajectories.at("V(2)").at(3).has_value());
    CHECK(*pvb1.trajectories.at("V(2)").at(8) == 1);

    auto pfb1 = formulas::stability_report(Algebra::PfbDual, 1, 2, 8);
    CHECK(pfb1.stable_from == 3);
    CHECK(pfb1.bound_holds);

    auto pvb2 = formulas::stability_report(Algebra::PvbDual, 2, 5, 9);
    CHECK(pvb2.guaranteed_from == 8);
    CHECK(pvb2.bound_holds);
    CHECK(pvb2.stable_from <= 8);
    CHECK(formulas::decompose_pvb(8, 2).entries.size() == formulas::decompose_pvb(9, 2).entries.size());

    // a single n cannot witness stability
    auto one = formulas::stability_report(Algebra::PfbDual, 1, 5, 5);
    CHECK_FALSE(one.stable_within_range);
    CHECK_THROWS(formulas::stability_report(Algebra::PvbDual, 2, 2, 5));
}
