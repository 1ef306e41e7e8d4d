#include <doctest.h>

#include "braidchar/symfunc.hpp"

using namespace braidchar;

namespace {

using Schur = std::map<Partition, Rational>;

// Monomial expansion in N variables, exponent vectors -> coefficient. Used as
// an independent model of plethysm: f[g] evaluated through the variables.
using Poly = std::map<std::vector<int>, Rational>;

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

// p_k evaluated on a list of monomials (each a variable exponent vector).
Poly power_on(const std::vector<std::vector<int>>& monomials, int k, std::size_t vars)
{
    Poly out;
    for (const auto& m : monomials) {
        std::vector<int> e(vars, 0);
        for (std::size_t i = 0; i < vars; ++i)
            e[i] = m[i] * k;
        out[e] += 1;
    }
    return out;
}

Poly evaluate(const SymFunc& f, const std::vector<std::vector<int>>& monomials, std::size_t vars)
{
    Poly total;
    for (const auto& [mu, c] : f.power_sum_coeffs()) {
        Poly term{{std::vector<int>(vars, 0), c}};
        for (int part : mu.parts())
            term = poly_mul(term, power_on(monomials, part, vars));
        for (const auto& [e, v] : term)
            total[e] += v;
    }
    std::erase_if(total, [](const auto& kv) { return sgn(kv.second) == 0; });
    return total;
}

} // namespace

TEST_CASE("basic functions in the Schur basis")
{
    CHECK(to_schur(SymFunc::homogeneous(4)) == Schur{{Partition{4}, 1}});
    CHECK(to_schur(SymFunc::elementary(4)) == Schur{{Partition{1, 1, 1, 1}, 1}});
    CHECK(to_schur(SymFunc::power_sum(Partition{2})) == Schur{{Partition{2}, 1}, {Partition{1, 1}, -1}});
    CHECK(to_schur(SymFunc::schur(Partition{3, 2})) == Schur{{Partition{3, 2}, 1}});
    CHECK(SymFunc::homogeneous(0) == SymFunc::one());
    CHECK(SymFunc::elementary(0) == SymFunc::one());
    CHECK(SymFunc(3).is_zero());
}

TEST_CASE("regular characteristic is the dimension-weighted Schur sum")
{
    for (int m = 1; m <= 7; ++m) {
        auto s = to_schur(ch_regular(m));
        CHECK(s.size() == partitions(m).size());
        for (const auto& [lambda, c] : s)
            CHECK(c == Rational(irreducible_dimension(lambda)));
    }
}

TEST_CASE("Pieri rule for h_1")
{
    auto prod = to_schur(SymFunc::homogeneous(1) * SymFunc::schur(Partition{2, 1}));
    CHECK(prod == Schur{{Partition{3, 1}, 1}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}});
    auto hh = to_schur(SymFunc::homogeneous(2) * SymFunc::homogeneous(2));
    CHECK(hh == Schur{{Partition{4}, 1}, {Partition{3, 1}, 1}, {Partition{2, 2}, 1}});
}

TEST_CASE("Frobenius map round trip")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions(n)) {
            auto chi = ClassFunction::irreducible(lambda);
            CHECK(SymFunc::frobenius(chi) == SymFunc::schur(lambda));
            CHECK(SymFunc::schur(lambda).to_class_function() == chi);
        }
}

TEST_CASE("small plethysms")
{
    auto h2 = SymFunc::homogeneous(2);
    auto e2 = SymFunc::elementary(2);
    CHECK(to_schur(plethysm(h2, h2)) == Schur{{Partition{4}, 1}, {Partition{2, 2}, 1}});
    CHECK(to_schur(plethysm(e2, h2)) == Schur{{Partition{3, 1}, 1}});
    CHECK(to_schur(plethysm(h2, e2)) == Schur{{Partition{2, 2}, 1}, {Partition{1, 1, 1, 1}, 1}});
    CHECK(to_schur(plethysm(e2, e2)) == Schur{{Partition{2, 1, 1}, 1}});
    CHECK(to_schur(plethysm(SymFunc::homogeneous(3), h2)) ==
          Schur{{Partition{6}, 1}, {Partition{4, 2}, 1}, {Partition{2, 2, 2}, 1}});
    CHECK_THROWS_AS(plethysm(h2, SymFunc(2)), std::invalid_argument);
    CHECK(plethysm(SymFunc::one(), h2) == SymFunc::one());
}

TEST_CASE("plethysm agrees with substitution of monomials")
{
    // three variables; g = h_2 has monomials x_i x_j (i <= j)
    const std::size_t vars = 3;
    std::vector<std::vector<int>> monomials_h2;
    for (std::size_t i = 0; i < vars; ++i)
        for (std::size_t j = i; j < vars; ++j) {
            std::vector<int> e(vars, 0);
            ++e[i];
            ++e[j];
            monomials_h2.push_back(e);
        }
    std::vector<std::vector<int>> variables;
    for (std::size_t i = 0; i < vars; ++i) {
        std::vector<int> e(vars, 0);
        e[i] = 1;
        variables.push_back(e);
    }
    for (const auto& f : {SymFunc::elementary(2), SymFunc::homogeneous(3), SymFunc::schur(Partition{2, 1})}) {
        auto direct = evaluate(plethysm(f, SymFunc::homogeneous(2)), variables, vars);
        auto substituted = evaluate(f, monomials_h2, vars);
        CHECK(direct == substituted);
    }
}

TEST_CASE("degree bookkeeping")
{
    auto a = SymFunc::homogeneous(2);
    auto b = SymFunc::homogeneous(3);
    CHECK_THROWS(a + b);
    SymFunc zero(0);
    zero += b;
    CHECK(zero == b);
    CHECK((a * b).degree() == 5);
    CHECK(plethysm(b, a).degree() == 6);
    CHECK((a - a).is_zero());
}
