#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxrep/word.hpp"

namespace maxrep {

/// Restricts which repetitions enter a sum. Absent fields do not filter.
struct SumFilter {
    std::optional<std::size_t> min_period;
    std::optional<std::size_t> max_period;
    std::optional<Rational> min_exponent;

    /// Throws InputError when min_period > max_period or min_exponent <= 1.
    void validate() const;
    bool accepts(const Repetition& r) const;
};

/// Exact running sum of e(r) - 1 = (|r| - p) / p, grouped by period so that
/// the rational is only assembled once, over a common denominator.
class ExcessAccumulator {
public:
    void add(const Repetition& r) { add(r.period, r.excess()); }
    void add(std::size_t period, std::uint64_t excess);

    Rational total() const;
    /// Exact sum restricted to periods in [min_period, max_period].
    Rational total(std::size_t min_period, std::size_t max_period) const;
    /// Compensated floating-point value of total(); no big-number work.
    double approx() const;

    std::uint64_t excess_at(std::size_t period) const {
        return period < by_period_.size() ? by_period_[period] : 0;
    }
    std::size_t period_bound() const { return by_period_.size(); }

private:
    std::vector<std::uint64_t> by_period_;
};

/// Everything the sweep and bound checks need from one word, gathered during
/// a single scan without materialising the repetition set.
struct WordSummary {
    std::size_t n = 0;
    std::uint64_t count = 0;
    std::size_t max_period = 0;
    ExcessAccumulator excess;
    std::optional<Rational> threshold;  // exponent threshold for count_at_least
    std::uint64_t count_at_least = 0;
};

/// Scans the word once. With a threshold, also counts the repetitions of
/// exponent >= threshold (which must exceed 1).
WordSummary summarize(const Word& word, const std::optional<Rational>& threshold = std::nullopt);
/// The same summary computed from an already enumerated set.
WordSummary summarize(const RepetitionSet& reps, const std::optional<Rational>& threshold = std::nullopt);

Rational decremented_sum(const RepetitionSet& reps);
Rational filtered_sum(const RepetitionSet& reps, const SumFilter& filter);
/// Number of repetitions with exponent >= threshold (threshold > 1).
std::size_t count_at_least(const RepetitionSet& reps, const Rational& threshold);
/// Largest minimal period in the set, 0 when empty.
std::size_t max_period(const RepetitionSet& reps);

/// (n/4 - 1) + 4 * sum_{i=1}^{n/4} (n/4 - i + 1) / (4i - 3), for n = 0 mod 4.
double zeroes_ones_lower_terms(std::size_t n);

// Closed-form bound values (natural logarithm).
double nlogn_bound(std::size_t n);
double period_at_most_bound(std::size_t n, std::size_t p);   // n (ln p + 1)
double period_at_least_bound(std::size_t n, std::size_t p);  // n ln(n / p)
double bounded_period_bound(std::size_t n, std::size_t k, std::size_t p);  // n + 3kp(ln p + 1)

/// Relative tolerance applied to the floating-point side of bound checks.
inline constexpr double kBoundTolerance = 1e-9;

/// measured <= bound (1 + tol), compared exactly against the rounded bound.
bool within_upper(const Rational& measured, double bound);
/// measured >= bound - tol |bound|.
bool within_lower(const Rational& measured, double bound);

enum class BoundSense { Upper, Lower };

struct BoundReport {
    std::string name;
    std::string formula;
    BoundSense sense = BoundSense::Upper;
    std::size_t n = 0;
    std::size_t k = 0;
    Rational measured;
    double bound = 0.0;
    double slack = 0.0;  // bound - measured
    bool satisfied = false;
    bool vacuous = false;
};

struct BoundParams {
    std::optional<Rational> eps;
    std::optional<std::size_t> p;
    std::optional<std::size_t> k;
};

/// One row per applicable bound. Rows needing p or eps are emitted only
/// when that parameter is given. The bounded_period row throws
/// PreconditionError if p is smaller than a period present in reps.
std::vector<BoundReport> bound_report(const Word& word, const RepetitionSet& reps,
                                      const BoundParams& params = {});
/// Same rows from a single streaming scan; memory stays O(n).
std::vector<BoundReport> bound_report(const Word& word, const BoundParams& params = {});

/// Parses "a/b", an integer, or a decimal literal ("0.25") into an exact rational.
Rational parse_rational(const std::string& text);

} // namespace maxrep
