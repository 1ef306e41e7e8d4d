#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidchar/combinatorics.hpp"
#include "braidchar/graded_character.hpp"
#include "braidchar/snrep.hpp"

// Brute-force ground truth built from the explicit monomial bases.
//
// A basis monomial is a wedge product of admissible chains with disjoint
// supports, written in order of increasing roots. A chain i_1 -> ... -> i_m
// stands for r_{i_1 i_2} ^ ... ^ r_{i_{m-1} i_m} and has degree m - 1.
// For pvb! a chain may visit its support in any order; for pfb! it must be
// increasing, so a pfb! basis element is the same thing as a set partition.
// Singleton supports are the scalar 1 and are never stored.
namespace braidchar::oracle {

struct BasisElement {
    /// Chains with 0-based vertices, ordered by increasing root (first vertex).
    std::vector<std::vector<int>> blocks;

    [[nodiscard]] int degree() const;

    /// Debug form with 1-based labels: "(1<2<4)(3<5)" for pfb!, "(2,1,4)(3,5)"
    /// for pvb!.
    [[nodiscard]] std::string to_string(Algebra algebra) const;

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

struct SignedElement {
    BasisElement element;
    int sign = 1;
};

/// Position in the canonical enumeration of basis(algebra, n, degree), with sign.
struct SignedIndex {
    std::size_t index = 0;
    int sign = 1;
};

/// Visits every basis element of the given degree without materializing the
/// list. Order matches basis().
void for_each_basis_element(Algebra algebra, int n, int degree,
                            const std::function<void(const BasisElement&)>& visit);

/// Complete, duplicate-free, deterministic basis of the degree component.
/// Throws std::out_of_range unless n >= 1 and 0 <= degree <= n - 1.
std::vector<BasisElement> basis(Algebra algebra, int n, int degree);

/// Immutable, cached enumeration with reverse lookup.
class BasisIndex {
public:
    BasisIndex(Algebra algebra, int n, int degree);
    [[nodiscard]] const std::vector<BasisElement>& elements() const { return elements_; }
    [[nodiscard]] std::size_t index_of(const BasisElement& b) const;

private:
    std::vector<BasisElement> elements_;
    std::map<BasisElement, std::size_t> lookup_;
};

std::shared_ptr<const BasisIndex> basis_index(Algebra algebra, int n, int degree);

/// sigma . b = sign . b' with b' in normal form.
///  1. relabel i -> sigma(i) in every chain;
///  2. pfb! only: sort each chain into increasing order, picking up the sign
///     of the sorting permutation;
///  3. reorder chains by increasing root, picking up (-1)^{d_i d_j} for each
///     pair of wedge factors of degrees d_i, d_j that change relative order.
SignedElement act(Algebra algebra, const Permutation& sigma, const BasisElement& b);

/// act() on the basis element with the given index of basis(algebra, n, degree).
SignedIndex act(Algebra algebra, const Permutation& sigma, int degree, std::size_t index);

/// Graded trace of an arbitrary permutation.
GradedCharacter graded_character(Algebra algebra, const Permutation& sigma);

/// Graded trace at the canonical representative of the cycle type mu
/// (cycles of consecutive integers).
GradedCharacter graded_character(Algebra algebra, int n, const Partition& mu);

/// Graded characters for every cycle type of S_n, computed in parallel.
std::map<Partition, GradedCharacter> all_characters(Algebra algebra, int n);

/// Class function of the degree-k component.
ClassFunction degree_character(Algebra algebra, int n, int degree);

/// Same, reusing a precomputed all_characters() result.
ClassFunction degree_character(const std::map<Partition, GradedCharacter>& characters, int n, int degree);

/// Dimensions of each degree, from counting the basis.
std::vector<BigInt> hilbert_series(Algebra algebra, int n);

/// Decomposition of the top degree n - 1. Requires n >= 2.
std::map<Partition, Rational> top_degree_report(Algebra algebra, int n);

} // namespace braidchar::oracle
