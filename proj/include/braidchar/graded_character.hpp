#pragma once

#include <string_view>
#include <vector>

#include "braidchar/combinatorics.hpp"

namespace braidchar {

/// The two quadratic algebras whose graded S_n-characters this library
/// computes: the cohomology algebras of the pure virtual and pure flat braid
/// groups.
enum class Algebra { PvbDual, PfbDual };

/// "pvb-dual" / "pfb-dual".
std::string_view algebra_name(Algebra a);

/// Accepts "pvb-dual", "pvb_dual", "pvb" and the pfb equivalents.
Algebra parse_algebra(std::string_view text);

/// Graded trace of one conjugacy class: coeffs[k] is the trace on the
/// degree-k component, i.e. a polynomial in z.
struct GradedCharacter {
    int n = 0;
    Partition mu;
    std::vector<BigInt> coeffs;

    friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;
};

/// Coefficient-wise product of integer polynomials.
std::vector<BigInt> poly_multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

} // namespace braidchar
