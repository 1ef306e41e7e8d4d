#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braidchar/combinatorics.hpp"
#include "braidchar/graded_character.hpp"

namespace braidchar::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_mismatch = 3,
};

enum class Method { Formula, Oracle, Both };
enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
    std::string command;
    std::optional<Algebra> algebra;
    std::optional<int> n;
    std::optional<int> degree;
    std::optional<Partition> cycle_type;
    std::optional<Permutation> sigma;
    std::optional<Method> method; // unset: both when the oracle is feasible
    int trunc = 12;
    OutputFormat output = OutputFormat::Json;
    std::optional<std::string> out_path;
    std::string suite = "all";
    std::optional<int> n_min;
    std::optional<int> n_max;
};

/// Runs one invocation. args excludes the program name. Diagnostics go to
/// err as a single line; the report goes to out, or to --out when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidchar::cli
