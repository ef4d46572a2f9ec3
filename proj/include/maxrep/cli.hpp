#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxrep/extremal.hpp"
#include "maxrep/generate.hpp"
#include "maxrep/word.hpp"

namespace maxrep::cli {

enum class Command { Find, Stats, Bounds, Sweep, Search, Classify, Exchange };
enum class Format { Json, Tsv, Csv };

enum ExitCode : int {
    kOk = 0,
    kBoundViolated = 1,
    kInputError = 2,
    kPreconditionError = 3,
    kResourceError = 4,
    kIoError = 5,
};

struct RunConfig {
    Command command = Command::Find;

    // Exactly one input source for word-consuming commands.
    std::optional<std::string> word;
    std::optional<std::string> file;
    std::optional<Family> gen;

    std::optional<std::string> alphabet;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::size_t> p;
    std::uint64_t seed = 0;

    std::optional<Rational> eps;
    std::optional<std::size_t> min_period;
    std::optional<std::size_t> max_period;

    // sweep range
    std::optional<std::size_t> n_min;
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> n_step;

    Format format = Format::Json;
    std::uint64_t budget = kDefaultSearchBudget;
    Objective objective = Objective::Min;
    bool report_only = false;
    bool iterate = false;
};

/// Parses a full argument vector (args[0] is the program name). Throws
/// InputError on malformed or inconsistent flags. Returns nullopt when
/// help was requested and printed to out.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Runs a validated config, writing the report to out. Library errors
/// propagate as exceptions.
int run(const RunConfig& config, std::ostream& out);

/// parse_args + run with error reporting on err; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed column order of the sweep CSV.
inline constexpr const char* kSweepColumns[] = {
    "n", "sum_exact", "sum_decimal", "count", "nlogn_bound", "zeroes_ones_lower", "count_over_n2"};

} // namespace maxrep::cli
