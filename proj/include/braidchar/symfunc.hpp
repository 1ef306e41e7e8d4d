#pragma once

#include <map>

#include "braidchar/combinatorics.hpp"
#include "braidchar/snrep.hpp"

namespace braidchar {

/// Homogeneous symmetric function with exact rational coefficients, held in
/// the power-sum basis: f = sum_mu c_mu p_mu. Zero coefficients are never
/// stored. Schur-basis input and output go through the S_n character table.
class SymFunc {
public:
    /// The zero function of the given degree.
    explicit SymFunc(int degree = 0);
    SymFunc(int degree, const std::map<Partition, Rational>& power_sum_coeffs);

    static SymFunc one() { return power_sum(Partition()); }
    static SymFunc power_sum(const Partition& mu);
    static SymFunc schur(const Partition& lambda);
    static SymFunc elementary(int p);
    static SymFunc homogeneous(int p);

    /// Frobenius characteristic sum_mu f(mu) p_mu / z_mu.
    static SymFunc frobenius(const ClassFunction& f);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::map<Partition, Rational>& power_sum_coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coefficient(const Partition& mu) const;

    /// Inverse Frobenius map: the class function whose characteristic is *this.
    [[nodiscard]] ClassFunction to_class_function() const;

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& scalar);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    void add_term(const Partition& mu, const Rational& c);

    int degree_ = 0;
    std::map<Partition, Rational> coeffs_;
};

SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// f[g]. Uses p_m[g] = g with every p_i replaced by p_{i m}, extended
/// multiplicatively over p_mu and linearly in f. Throws std::invalid_argument
/// when g is zero.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// p_1^m, the characteristic of the regular representation of S_m.
SymFunc ch_regular(int m);

/// Expansion in Schur functions; only nonzero coefficients are present.
std::map<Partition, Rational> to_schur(const SymFunc& f);

} // namespace braidchar
