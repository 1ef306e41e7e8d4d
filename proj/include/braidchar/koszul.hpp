#pragma once

#include <optional>
#include <vector>

#include "braidchar/combinatorics.hpp"
#include "braidchar/graded_character.hpp"

// Graded characters of the Koszul algebras pvb_n and pfb_n, recovered from
// their quadratic duals through A_sigma(z) A!_sigma(-z) = 1.
namespace braidchar::koszul {

/// Power series truncated after z^truncation, exact rational coefficients.
class TruncatedSeries {
public:
    /// The zero series.
    explicit TruncatedSeries(int truncation = 0);
    /// Extra coefficients are dropped, missing ones are zero.
    TruncatedSeries(int truncation, std::vector<Rational> coeffs);

    static TruncatedSeries from_polynomial(int truncation, const std::vector<BigInt>& coeffs);

    [[nodiscard]] int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    /// f(z) -> f(-z).
    [[nodiscard]] TruncatedSeries negate_variable() const;

    /// True when every coefficient is an integer.
    [[nodiscard]] bool is_integral() const;

    /// Product truncated at the smaller of the two truncations.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse to the same truncation. Throws std::domain_error
/// when the constant term is zero.
TruncatedSeries invert(const TruncatedSeries& s);

/// 1 / A!_{n,mu}(-z), the graded trace of class mu on pvb_n or pfb_n.
/// Requires trunc >= 0.
TruncatedSeries dual_character(Algebra algebra, int n, const Partition& mu, int trunc = 12);

struct IdentityCheck {
    bool ok = true;
    /// First degree at which A(z) A!(-z) differs from 1, with its coefficient.
    std::optional<int> residual_degree;
    Rational residual;
};

/// Multiplies dual_character by the brute-force graded character of the
/// quadratic dual evaluated at -z when n is small enough for the basis
/// enumeration (pvb n <= 6, pfb n <= 7); otherwise by the closed form.
IdentityCheck verify_identity(Algebra algebra, int n, const Partition& mu, int trunc = 12);

/// Same check against a caller-supplied character of the quadratic dual.
IdentityCheck verify_identity(const TruncatedSeries& dual, const GradedCharacter& quadratic_dual);

} // namespace braidchar::koszul
