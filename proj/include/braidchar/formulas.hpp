#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidchar/combinatorics.hpp"
#include "braidchar/graded_character.hpp"
#include "braidchar/symfunc.hpp"

// Closed-form side: Hilbert series, graded character formulas, plethystic
// decompositions, multiplicity counts and stability reports.
namespace braidchar::formulas {

/// Irreducible decomposition of one degree of one algebra on S_n.
struct DecompositionTable {
    int n = 0;
    int degree = 0;
    std::map<Partition, BigInt> entries; // nonzero entries only

    friend bool operator==(const DecompositionTable&, const DecompositionTable&) = default;
};

/// Graded dimensions. pvb!: L(n, n-k); pfb!: S(n, n-k). Requires n >= 1.
GradedCharacter hilbert(Algebra algebra, int n);

/// Graded character of pvb!_n at cycle type mu: the product over distinct
/// part sizes k (multiplicity a) of
///   sum_{0<=b<=a} L(a,b) (-1)^{(a-b)(k-1)} k^{a-b} z^{(a-b)k}.
GradedCharacter char_pvb(int n, const Partition& mu);

/// Graded character of pfb!_n at cycle type mu: sum over set partitions of
/// the cycles into parts S_i; each part contributes
///   sum_{k | every cycle length} eps_k k^{|S_i|-1} z^{k (D-1)},
/// where D = sum of len/k over the cycles in S_i and
///   eps_k = (-1)^{(k-1)(D-1) + sum (len/k - 1)}.
GradedCharacter char_pfb(int n, const Partition& mu);

GradedCharacter character(Algebra algebra, int n, const Partition& mu);

/// The characteristic of the degree-k component via plethysm:
///   sum over partitions a of k with l(a) <= n-k of
///   prod_t v_{t,a_t}[inner_{t+1}] * h_{n-k-l(a)},
/// with v = e for odd t, h for even t; inner is ch Reg for pvb!, e for pfb!.
SymFunc characteristic(Algebra algebra, int n, int k);

/// to_schur(characteristic()). Throws std::domain_error on a non-integral
/// coefficient.
DecompositionTable decompose(Algebra algebra, int n, int k);
inline DecompositionTable decompose_pvb(int n, int k) { return decompose(Algebra::PvbDual, n, k); }
inline DecompositionTable decompose_pfb(int n, int k) { return decompose(Algebra::PfbDual, n, k); }

/// Number of partitions of k into at most n-k parts, no odd part repeated.
/// Requires n > k >= 1.
BigInt trivial_multiplicity_pvb(int n, int k);

/// Same count through the partitions of n with exactly n-k parts and no
/// repeated even part.
BigInt trivial_multiplicity_pvb_via_n(int n, int k);

/// Coefficients 0..max_degree of prod_{k>0} (1+z^{2k-1})/(1-z^{2k}).
std::vector<BigInt> no_repeated_odd_generating_function(int max_degree);

/// Schur support of e_k[e_2] predicted by the Frobenius-coordinate rule:
/// one s_pi for each strict partition g of k, pi = (g_1-1, ..., g_r-1 | g_1, ..., g_r).
/// Each pi is a partition of 2k. Sorted, multiplicity one each.
std::vector<Partition> elementary_of_e2_support(int k);

struct ConstraintViolation {
    Partition lambda;
    int n = 0;
    int k = 0;
    std::string reason;
};

struct ConstraintReport {
    int n = 0;
    int k = 0;
    std::vector<ConstraintViolation> violations;
    /// Two-row entries found (lambda -> multiplicity), for reporting.
    std::map<Partition, BigInt> two_row_entries;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks a pfb! decomposition table: every lambda present has
/// n - lambda_0 >= k, and no two-row lambda appears except a single V(1)
/// when k = 1.
ConstraintReport constraint_checks(const DecompositionTable& pfb_table);
ConstraintReport constraint_checks(int n, int k);

/// Multiplicity trajectory of one Church-Farb label over a range of n.
/// std::nullopt marks an n at which the label is undefined.
using Trajectory = std::map<int, std::optional<BigInt>>;

struct StabilityReport {
    Algebra algebra = Algebra::PvbDual;
    int k = 0;
    int n_min = 0;
    int n_max = 0;
    std::map<std::string, Trajectory> trajectories; // keyed by "V(...)"
    /// Smallest n in range from which every trajectory is constant
    /// (undefined counts as 0).
    int stable_from = 0;
    /// True when at least two consecutive n in range witness the stable
    /// table. A verdict at n_max alone is a truncation artefact.
    bool stable_within_range = false;
    /// max(4k, n_min): the range from which stability is guaranteed.
    int guaranteed_from = 0;
    /// Constancy holds from guaranteed_from to n_max.
    bool bound_holds = false;
};

/// Uses the plethystic tables. Requires 1 <= k < n_min <= n_max.
StabilityReport stability_report(Algebra algebra, int k, int n_min, int n_max);

/// Same, from externally supplied tables (one per n, consecutive).
StabilityReport stability_report(Algebra algebra, int k, const std::vector<DecompositionTable>& tables);

} // namespace braidchar::formulas
