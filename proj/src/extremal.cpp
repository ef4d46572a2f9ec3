#include "maxrep/extremal.hpp"

#include <string>

#include "maxrep/generate.hpp"
#include "maxrep/stats.hpp"

namespace maxrep {

GapProfile gap_profile(const Word& word) {
    GapProfile g;
    g.gaps.resize(word.alphabet_size());
    std::vector<std::size_t> last(word.alphabet_size(), SIZE_MAX);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const Symbol c = word[i];
        if (last[c] != SIZE_MAX) g.gaps[c].push_back(i - last[c]);
        last[c] = i;
    }
    return g;
}

Rational gap_sum(const GapProfile& profile) {
    ExcessAccumulator acc;
    for (const auto& letter : profile.gaps)
        for (std::size_t d : letter) acc.add(d, 1);
    return acc.total();
}

std::optional<ClosePair> find_close_pair(const Word& word, std::size_t k) {
    if (k < 2) throw InputError("find_close_pair: k must be at least 2");
    std::vector<std::size_t> last(word.alphabet_size(), SIZE_MAX);
    for (std::size_t r = 0; r < word.size(); ++r) {
        const Symbol c = word[r];
        // The previous occurrence is the closest one, hence the largest left.
        if (last[c] != SIZE_MAX && r - last[c] < k) return ClosePair{last[c], r};
        last[c] = r;
    }
    return std::nullopt;
}

Word exchange_move(const Word& word, std::size_t k) {
    const std::size_t n = word.size();
    for (std::size_t i = 0; i < n; ++i)
        if (word[i] >= k)
            throw PreconditionError("exchange_move: letter at position " + std::to_string(i + 1) +
                                    " is outside A_" + std::to_string(k));

    const auto pair = find_close_pair(word, k);
    if (!pair) throw PreconditionError("exchange_move: the word has no close pair");
    const std::size_t r = pair->right;
    const std::string where = "close pair (" + std::to_string(pair->left + 1) + ", " +
                              std::to_string(r + 1) + ")";

    if (r < k)
        throw PreconditionError("exchange_move: " + where + " lies inside the first " +
                                std::to_string(k) + " letters, so the prefix has no full block");
    std::vector<bool> seen(k, false);
    for (std::size_t m = 0; m < k; ++m) {
        if (seen[word[m]])
            throw PreconditionError("exchange_move: the first " + std::to_string(k) +
                                    " letters are not pairwise distinct");
        seen[word[m]] = true;
    }
    for (std::size_t m = k; m < r; ++m)
        if (word[m] != word[m - k])
            throw PreconditionError("exchange_move: prefix before " + where +
                                    " is not k-periodic at position " + std::to_string(m + 1));

    const Symbol next = word[r - k];  // a_{i'}
    const Symbol moved = word[r];     // a_j
    if (moved == next)
        throw PreconditionError("exchange_move: letter at " + std::to_string(r + 1) +
                                " already continues the periodic prefix");

    std::size_t m_prime = n;
    for (std::size_t m = r + 1; m < n; ++m)
        if (word[m] == next) {
            m_prime = m;
            break;
        }

    std::vector<Symbol> out(word.symbols().begin(), word.symbols().end());
    for (std::size_t m = r; m < n; ++m) {
        if (word[m] == moved)
            out[m] = next;
        else if (word[m] == next && m >= m_prime)
            out[m] = moved;
    }
    return Word(std::move(out), word.alphabet_size(), word.display_table());
}

namespace {

ExtremalResult search(Objective objective, std::size_t k, std::size_t n, std::uint64_t budget) {
    if (k == 0) throw InputError("search: k must be positive");
    const std::uint64_t needed = canonical_word_count(k, n);
    if (needed > budget)
        throw ResourceError("search over k = " + std::to_string(k) + ", n = " + std::to_string(n) +
                            " needs " + std::to_string(needed) +
                            " evaluations, budget is " + std::to_string(budget));

    ExtremalResult result;
    result.objective = objective;
    result.k = k;
    result.n = n;
    bool first = true;
    for (CanonicalWords it(k, n); !it.done(); it.next()) {
        Word w = it.word();
        const Rational value = summarize(w).excess.total();
        ++result.examined;
        const bool better = first || (objective == Objective::Min ? value < result.optimum
                                                                  : value > result.optimum);
        if (better) {
            result.optimum = value;
            result.witnesses.clear();
            first = false;
        }
        if (value == result.optimum) result.witnesses.push_back(std::move(w));
    }
    return result;
}

} // namespace

ExtremalResult search_min(std::size_t k, std::size_t n, std::uint64_t budget) {
    return search(Objective::Min, k, n, budget);
}

ExtremalResult search_max(std::size_t k, std::size_t n, std::uint64_t budget) {
    return search(Objective::Max, k, n, budget);
}

} // namespace maxrep
