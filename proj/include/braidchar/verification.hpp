#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidchar/graded_character.hpp"

// Cross-checks between the brute-force oracle and the closed forms, grouped
// into named suites.
namespace braidchar::verification {

struct Check {
    std::string name;
    bool pass = true;
    /// Summary on success, counterexample on failure.
    std::string detail;
};

struct SuiteOptions {
    std::optional<Algebra> algebra; // both when unset
    std::optional<int> n;           // pins n_min = n_max = n
    std::optional<int> n_min;
    std::optional<int> n_max;
    int trunc = 12;
};

/// "hilbert", "characters", "decompositions", "koszul", "multiplicities",
/// "stability", "constraints", "top-degree", "plethysm".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument on
/// an unknown suite name.
std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& options = {});

/// Largest n for which the oracle is run by default (pvb! 6, pfb! 7).
int oracle_default_limit(Algebra algebra);

/// Largest n the oracle accepts at all (pvb! 8, pfb! 9).
int oracle_hard_limit(Algebra algebra);

} // namespace braidchar::verification
