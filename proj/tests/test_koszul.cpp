#include <doctest.h>

#include <random>

#include "braidchar/formulas.hpp"
#include "braidchar/koszul.hpp"
#include "braidchar/oracle.hpp"

using namespace braidchar;
using koszul::TruncatedSeries;

namespace {

TruncatedSeries series(int trunc, std::initializer_list<long> c)
{
    std::vector<Rational> q;
    for (long x : c)
        q.emplace_back(x);
    return {trunc, q};
}

std::vector<Rational> powers_of(long base, int trunc)
{
    std::vector<Rational> out;
    Rational p = 1;
    for (int i = 0; i <= trunc; ++i) {
        out.push_back(p);
        p *= base;
    }
    return out;
}

} // namespace

TEST_CASE("inversion examples")
{
    CHECK(koszul::invert(series(6, {1, -2})).coeffs() == powers_of(2, 6));
    CHECK(koszul::invert(series(9, {1, -1})).coeffs() == powers_of(1, 9));
    CHECK(koszul::invert(series(0, {1})).coeffs() == powers_of(1, 0));
    CHECK_THROWS_AS(koszul::invert(series(4, {0, 1})), std::domain_error);
    auto half = koszul::invert(series(3, {2}));
    CHECK(half[0] == Rational(1, 2));
    CHECK(half[1] == 0);
}

TEST_CASE("series arithmetic")
{
    auto a = series(4, {1, 2, 3});
    CHECK(a.truncation() == 4);
    CHECK(a.negate_variable().coeffs() == series(4, {1, -2, 3}).coeffs());
    auto b = series(2, {1, 1});
    auto prod = a * b;
    CHECK(prod.truncation() == 2);
    CHECK(prod.coeffs() == series(2, {1, 3, 5}).coeffs());
    CHECK(series(3, {1, 2, 3, 4, 5, 6}).coeffs().size() == 4);
    CHECK_THROWS(TruncatedSeries(-1));
}

TEST_CASE("double inversion returns the series")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c{Rational(1)};
        for (int i = 1; i <= 10; ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            c.push_back(q);
        }
        TruncatedSeries s(10, c);
        CHECK(koszul::invert(koszul::invert(s)) == s);
        auto one = s * koszul::invert(s);
        CHECK(one[0] == 1);
        for (int i = 1; i <= 10; ++i)
            CHECK(one[static_cast<std::size_t>(i)] == 0);
    }
}

TEST_CASE("dual character examples")
{
    CHECK(koszul::dual_character(Algebra::PvbDual, 2, Partition{1, 1}, 6).coeffs() == powers_of(2, 6));
    CHECK(koszul::dual_character(Algebra::PfbDual, 2, Partition{1, 1}, 12).coeffs() == powers_of(1, 12));

    // 1 / (1 - 3z + z^2): a_m = 3 a_{m-1} - a_{m-2}
    auto pfb3 = koszul::dual_character(Algebra::PfbDual, 3, Partition{1, 1, 1}, 5);
    std::vector<Rational> expected{1, 3};
    for (int m = 2; m <= 5; ++m)
        expected.push_back(3 * expected[static_cast<std::size_t>(m - 1)] - expected[static_cast<std::size_t>(m - 2)]);
    CHECK(pfb3.coeffs() == expected);
    CHECK_THROWS(koszul::dual_character(Algebra::PvbDual, 2, Partition{2}, -1));
}

TEST_CASE("transposition on the free algebra pvb_2")
{
    // pvb_2 is free on r12, r21 and (1 2) swaps them: a word of length k >= 1
    // is never fixed, so every positive degree has trace 0.
    auto s = koszul::dual_character(Algebra::PvbDual, 2, Partition{2}, 6);
    for (int k = 0; k <= 6; ++k) {
        long fixed = 0;
        for (long word = 0; word < (1L << k); ++word) {
            long swapped = word ^ ((1L << k) - 1);
            if (swapped == word)
                ++fixed;
        }
        CHECK(s[static_cast<std::size_t>(k)] == Rational(fixed));
    }
    CHECK(s[0] == 1);
}

TEST_CASE("identity check against the oracle")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions(n))
            for (auto a : {Algebra::PvbDual, Algebra::PfbDual}) {
                auto check = koszul::verify_identity(a, n, mu, 12);
                CHECK(check.ok);
                CHECK_FALSE(check.residual_degree.has_value());
            }
}

TEST_CASE("identity check reports the first residual")
{
    auto dual = koszul::dual_character(Algebra::PvbDual, 3, Partition{1, 1, 1}, 8);
    GradedCharacter wrong{3, Partition{1, 1, 1}, {BigInt(1), BigInt(6), BigInt(5)}};
    auto check = koszul::verify_identity(dual, wrong);
    CHECK_FALSE(check.ok);
    REQUIRE(check.residual_degree.has_value());
    CHECK(*check.residual_degree == 2);
    CHECK(check.residual == -1);
}

TEST_CASE("graded dimensions and character bounds")
{
    for (auto a : {Algebra::PvbDual, Algebra::PfbDual})
        for (int n = 1; n <= 6; ++n) {
            auto dims = koszul::dual_character(a, n, Partition::ones(n), 12);
            CHECK(dims.is_integral());
            for (const auto& c : dims.coeffs())
                CHECK(c >= 0);
            for (const auto& mu : partitions(n)) {
                auto s = koszul::dual_character(a, n, mu, 12);
                CHECK(s.is_integral());
                for (std::size_t i = 0; i < s.coeffs().size(); ++i)
                    CHECK(abs(s[i]) <= dims[i]);
            }
        }
}
