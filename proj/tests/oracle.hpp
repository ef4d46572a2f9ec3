#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// shares code with the library's detection or summation paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "maxrep/word.hpp"

namespace oracle {

using maxrep::Rational;
using maxrep::Repetition;
using maxrep::Symbol;
using maxrep::Word;

/// Least p in [1, j-i] with w[x] = w[x+p] across [i, j), by trying every p.
inline std::size_t naive_period(const std::vector<Symbol>& w, std::size_t i, std::size_t j) {
    for (std::size_t p = 1; p < j - i; ++p) {
        bool ok = true;
        for (std::size_t x = i; x + p < j && ok; ++x) ok = w[x] == w[x + p];
        if (ok) return p;
    }
    return j - i;
}

inline std::vector<Symbol> raw(const Word& w) {
    return {w.symbols().begin(), w.symbols().end()};
}

/// Definition applied literally with the naive period scan. O(n^4); n <= ~14.
inline std::vector<Repetition> naive_maximal_repetitions(const Word& word) {
    const auto w = raw(word);
    const std::size_t n = w.size();
    std::vector<Repetition> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j <= n; ++j) {
            const std::size_t p = naive_period(w, i, j);
            if (p >= j - i) continue;
            if (i > 0 && naive_period(w, i - 1, j) <= p) continue;
            if (j < n && naive_period(w, i, j + 1) <= p) continue;
            out.push_back({i, j, p});
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline Rational naive_sum(const std::vector<Repetition>& reps) {
    Rational s = 0;
    for (const auto& r : reps) {
        Rational e(static_cast<unsigned long>(r.end - r.start), static_cast<unsigned long>(r.period));
        e.canonicalize();
        s += e - 1;
    }
    return s;
}

/// Sum over pairs i < j with w[i] = w[j] of 1 / (j - i).
inline Rational pair_sum(const Word& word) {
    const auto w = raw(word);
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) s += Rational(1, static_cast<unsigned long>(j - i));
    return s;
}

/// Sum over consecutive occurrences of each letter of 1 / distance.
inline Rational naive_gap_sum(const Word& word) {
    const auto w = raw(word);
    Rational s = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t i = j; i-- > 0;)
            if (w[i] == w[j]) {
                s += Rational(1, static_cast<unsigned long>(j - i));
                break;
            }
    return s;
}

/// Every word of length n over A_k (k^n of them), in lexicographic order.
inline std::vector<Word> every_word(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    std::vector<Symbol> cur(n, 0);
    for (;;) {
        out.emplace_back(cur, k);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == k - 1) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

/// Lexicographically least image of w under all k! letter permutations.
inline std::vector<Symbol> orbit_min(const std::vector<Symbol>& w, std::size_t k) {
    std::vector<Symbol> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Symbol> best = w, img(w.size());
    do {
        for (std::size_t i = 0; i < w.size(); ++i) img[i] = perm[w[i]];
        best = std::min(best, img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Seeded random words, independent of the library's generator.
inline Word random_raw_word(std::mt19937_64& rng, std::size_t k, std::size_t n) {
    std::vector<Symbol> s(n);
    for (auto& x : s) x = static_cast<Symbol>(rng() % k);
    return Word(std::move(s), k);
}

} // namespace oracle
