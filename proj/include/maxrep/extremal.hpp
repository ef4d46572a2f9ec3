#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxrep/word.hpp"

namespace maxrep {

/// Distances between consecutive occurrences of each letter.
struct GapProfile {
    std::vector<std::vector<std::size_t>> gaps;  // indexed by symbol id
};

GapProfile gap_profile(const Word& word);
/// Sum over letters and gaps of 1 / d.
Rational gap_sum(const GapProfile& profile);

/// 0-based positions (left, right) of equal letters closer than k.
struct ClosePair {
    std::size_t left = 0;
    std::size_t right = 0;
    friend bool operator==(const ClosePair&, const ClosePair&) = default;
};

/// Among all pairs left < right with w[left] = w[right] and right - left < k,
/// the one with the smallest right; for that right, the largest left.
std::optional<ClosePair> find_close_pair(const Word& word, std::size_t k);

/// One step of the exchange argument behind the gap-sum minimum. Let
/// (l, r) be the close pair, i' the letter at r - k and j = w[r]. Every j at
/// a position >= r becomes i', and every i' at a position >= m' becomes j,
/// where m' is the first occurrence of i' after r (if any). Requires the
/// prefix w[0..r) to be (a_1..a_k)^q a_1..a_i with q >= 1, i.e. r >= k, the
/// first k letters distinct and the prefix k-periodic. The gap sum of the
/// result is strictly smaller.
Word exchange_move(const Word& word, std::size_t k);

enum class Objective { Min, Max };

struct ExtremalResult {
    Objective objective = Objective::Min;
    std::size_t k = 0;
    std::size_t n = 0;
    Rational optimum;
    std::vector<Word> witnesses;  // canonical, lexicographic
    std::uint64_t examined = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Exhaustive optimum of the decremented-exponent sum over canonical words
/// of length n over A_k, with every witness. Throws ResourceError when the
/// number of canonical words exceeds budget.
ExtremalResult search_min(std::size_t k, std::size_t n,
                          std::uint64_t budget = kDefaultSearchBudget);
ExtremalResult search_max(std::size_t k, std::size_t n,
                          std::uint64_t budget = kDefaultSearchBudget);

} // namespace maxrep
