#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "maxrep/word.hpp"

namespace maxrep {

enum class RepetitionType { Type1, Type2 };

const char* to_string(RepetitionType t) noexcept;

/// Least p >= 1 such that w[i] = w[i+p] throughout [start, end), computed
/// as length minus the longest proper border of the subword.
std::size_t minimal_period(const Word& word, std::size_t start, std::size_t end);

/// Reference enumeration straight from the definition: every interval whose
/// minimal period is below its length and strictly grows when the interval is
/// extended by one letter on either side. Quadratic memory, meant for words of
/// at most a few hundred letters.
RepetitionSet oracle_enumerate(const Word& word);

/// Receives all maximal repetitions of one period, sorted by start.
using PeriodSink = std::function<void(std::size_t period, std::span<const Repetition> reps)>;

/// Per-period scan. For each period p the letter matches w[i] = w[i+p] are
/// grouped into maximal blocks; a block [l, r] proposes the interval
/// [l, r+p+1), which is a maximal repetition iff its minimal period is
/// exactly p. Periods are visited in increasing order and the sink is
/// called once per period that has at least one repetition.
///
/// O(n^2) time, O(n) memory beyond what the sink keeps.
void scan_maximal_repetitions(const Word& word, const PeriodSink& sink);

/// All maximal repetitions of exponent > 1, sorted by (start, end, period).
RepetitionSet enumerate(const Word& word);

/// The maximal repetition containing positions i and j (0-based, i < j,
/// w[i] = w[j]): the period-(j-i) match region around i is extended, its
/// minimal period recomputed, and the extension repeated until stable.
Repetition repetition_from_match(const Word& word, std::size_t i, std::size_t j);

/// True iff r is a maximal repetition of word (checked from the definition).
bool is_maximal_repetition(const Word& word, const Repetition& r);

/// Type1 iff the prefix root of r has pairwise distinct letters and no
/// letter of r occurs in the word outside r.
RepetitionType classify(const Word& word, const Repetition& r);

} // namespace maxrep
