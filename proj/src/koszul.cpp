#include "braidchar/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidchar/formulas.hpp"
#include "braidchar/oracle.hpp"

namespace braidchar::koszul {

TruncatedSeries::TruncatedSeries(int truncation)
{
    if (truncation < 0)
        throw std::invalid_argument("TruncatedSeries: truncation must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int truncation, std::vector<Rational> coeffs)
    : TruncatedSeries(truncation)
{
    const auto len = std::min(coeffs.size(), coeffs_.size());
    for (std::size_t i = 0; i < len; ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::from_polynomial(int truncation, const std::vector<BigInt>& coeffs)
{
    std::vector<Rational> q;
    q.reserve(coeffs.size());
    for (const auto& c : coeffs)
        q.emplace_back(c);
    return {truncation, std::move(q)};
}

TruncatedSeries TruncatedSeries::negate_variable() const
{
    TruncatedSeries out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2)
        out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

bool TruncatedSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries out(std::min(a.truncation(), b.truncation()));
    const auto len = out.coeffs_.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < len; ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedSeries invert(const TruncatedSeries& s)
{
    const auto& a = s.coeffs();
    if (sgn(a[0]) == 0)
        throw std::domain_error("invert: constant term is zero");
    std::vector<Rational> b(a.size());
    b[0] = 1 / a[0];
    for (std::size_t m = 1; m < a.size(); ++m) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= m; ++i)
            acc += a[i] * b[m - i];
        b[m] = -acc * b[0];
    }
    return {s.truncation(), std::move(b)};
}

TruncatedSeries dual_character(Algebra algebra, int n, const Partition& mu, int trunc)
{
    if (trunc < 0)
        throw std::invalid_argument("dual_character: trunc must be >= 0");
    const auto quadratic_dual = formulas::character(algebra, n, mu);
    return invert(TruncatedSeries::from_polynomial(trunc, quadratic_dual.coeffs).negate_variable());
}

IdentityCheck verify_identity(const TruncatedSeries& dual, const GradedCharacter& quadratic_dual)
{
    const auto product = dual * TruncatedSeries::from_polynomial(dual.truncation(), quadratic_dual.coeffs).negate_variable();
    IdentityCheck check;
    for (std::size_t i = 0; i < product.coeffs().size(); ++i) {
        const Rational expected = i == 0 ? 1 : 0;
        if (product[i] != expected) {
            check.ok = false;
            check.residual_degree = static_cast<int>(i);
            check.residual = product[i] - expected;
            break;
        }
    }
    return check;
}

IdentityCheck verify_identity(Algebra algebra, int n, const Partition& mu, int trunc)
{
    const int oracle_limit = algebra == Algebra::PvbDual ? 6 : 7;
    const auto quadratic_dual = n <= oracle_limit ? oracle::graded_character(algebra, n, mu)
                                                  : formulas::character(algebra, n, mu);
    return verify_identity(dual_character(algebra, n, mu, trunc), quadratic_dual);
}

} // namespace braidchar::koszul
