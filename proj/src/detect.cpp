#include "maxrep/detect.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace maxrep {

const char* to_string(RepetitionType t) noexcept {
    return t == RepetitionType::Type1 ? "Type1" : "Type2";
}

namespace {

// Minimal periods of every prefix of w[start..n), via the failure function.
// out[len] = minimal period of w[start..start+len), out[0] unused.
void prefix_periods(std::span<const Symbol> s, std::size_t start, std::vector<std::uint32_t>& out) {
    const std::size_t m = s.size() - start;
    out.assign(m + 1, 0);
    std::vector<std::uint32_t> border(m + 1, 0);
    std::size_t b = 0;
    for (std::size_t len = 2; len <= m; ++len) {
        const Symbol c = s[start + len - 1];
        while (b > 0 && s[start + b] != c) b = border[b];
        if (s[start + b] == c) ++b;
        border[len] = static_cast<std::uint32_t>(b);
    }
    for (std::size_t len = 1; len <= m; ++len)
        out[len] = static_cast<std::uint32_t>(len - border[len]);
}

} // namespace

std::size_t minimal_period(const Word& word, std::size_t start, std::size_t end) {
    if (start >= end || end > word.size())
        throw InputError("minimal_period: empty or out-of-range interval [" + std::to_string(start) +
                         ", " + std::to_string(end) + ") in word of length " +
                         std::to_string(word.size()));
    const auto s = word.symbols().subspan(start, end - start);
    const std::size_t m = s.size();
    std::vector<std::size_t> border(m + 1, 0);
    std::size_t b = 0;
    for (std::size_t len = 2; len <= m; ++len) {
        while (b > 0 && s[b] != s[len - 1]) b = border[b];
        if (s[b] == s[len - 1]) ++b;
        border[len] = b;
    }
    return m - border[m];
}

RepetitionSet oracle_enumerate(const Word& word) {
    const std::size_t n = word.size();
    const auto s = word.symbols();
    // periods[i][len] = p(w[i..i+len))
    std::vector<std::vector<std::uint32_t>> periods(n);
    for (std::size_t i = 0; i < n; ++i) prefix_periods(s, i, periods[i]);

    std::vector<Repetition> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j <= n; ++j) {
            const std::size_t p = periods[i][j - i];
            if (p >= j - i) continue;
            if (i > 0 && periods[i - 1][j - i + 1] <= p) continue;
            if (j < n && periods[i][j - i + 1] <= p) continue;
            out.push_back({i, j, p});
        }
    }
    return RepetitionSet(n, std::move(out));
}

void scan_maximal_repetitions(const Word& word, const PeriodSink& sink) {
    const std::size_t n = word.size();
    if (n < 2) return;
    const Symbol* s = word.symbols().data();

    // reach[x] = largest end of a repetition already found (all of smaller
    // period) whose start is <= x. An interval with period p has a smaller
    // period iff it lies inside a maximal repetition of smaller period, so
    // the minimal-period test of a candidate reduces to reach[l] >= end.
    std::vector<std::size_t> reach(n, 0);
    std::vector<Repetition> batch;
    // Block boundaries of the match vector, gathered without branches:
    // edges[2t] is the start of block t, edges[2t+1] one past its end.
    std::vector<std::size_t> edges(n + 2);

    for (std::size_t p = 1; p < n; ++p) {
        const std::size_t lim = n - p;
        batch.clear();
        std::size_t m = 0;
        bool prev = false;
        for (std::size_t i = 0; i < lim; ++i) {
            const bool eq = s[i] == s[i + p];
            edges[m] = i;
            m += eq != prev;
            prev = eq;
        }
        edges[m] = lim;
        m += prev;
        for (std::size_t t = 0; t < m; t += 2) {
            const std::size_t l = edges[t];
            const std::size_t e = edges[t + 1] + p;
            if (reach[l] < e) batch.push_back({l, e, p});
        }
        if (batch.empty()) continue;

        sink(p, batch);

        std::size_t next = 0;
        std::size_t cur = 0;
        for (std::size_t x = batch.front().start; x < n; ++x) {
            while (next < batch.size() && batch[next].start == x) cur = std::max(cur, batch[next++].end);
            if (reach[x] >= cur && next == batch.size()) break;
            reach[x] = std::max(reach[x], cur);
        }
    }
}

RepetitionSet enumerate(const Word& word) {
    std::vector<Repetition> all;
    scan_maximal_repetitions(word, [&](std::size_t, std::span<const Repetition> reps) {
        all.insert(all.end(), reps.begin(), reps.end());
    });
    return RepetitionSet(word.size(), std::move(all));
}

Repetition repetition_from_match(const Word& word, std::size_t i, std::size_t j) {
    const std::size_t n = word.size();
    if (!(i < j && j < n))
        throw InputError("repetition_from_match: need 0 <= i < j < n, got i=" + std::to_string(i) +
                         ", j=" + std::to_string(j) + ", n=" + std::to_string(n));
    if (word[i] != word[j])
        throw InputError("repetition_from_match: letters at positions " + std::to_string(i + 1) +
                         " and " + std::to_string(j + 1) + " differ");

    std::size_t d = j - i;
    std::size_t a = i;
    std::size_t b = j + 1;
    for (;;) {
        while (a > 0 && word[a - 1] == word[a - 1 + d]) --a;
        while (b < n && word[b] == word[b - d]) ++b;
        const std::size_t q = minimal_period(word, a, b);
        if (q == d) return {a, b, d};
        d = q;
    }
}

bool is_maximal_repetition(const Word& word, const Repetition& r) {
    const std::size_t n = word.size();
    if (!(r.start < r.end && r.end <= n && r.period >= 1 && r.period < r.length())) return false;
    if (minimal_period(word, r.start, r.end) != r.period) return false;
    if (r.start > 0 && minimal_period(word, r.start - 1, r.end) <= r.period) return false;
    if (r.end < n && minimal_period(word, r.start, r.end + 1) <= r.period) return false;
    return true;
}

RepetitionType classify(const Word& word, const Repetition& r) {
    if (!is_maximal_repetition(word, r))
        throw InputError("classify: [" + std::to_string(r.start + 1) + ", " + std::to_string(r.end) +
                         "] with period " + std::to_string(r.period) +
                         " is not a maximal repetition of the word");

    std::vector<bool> in_root(word.alphabet_size(), false);
    for (std::size_t x = r.start; x < r.start + r.period; ++x) {
        if (in_root[word[x]]) return RepetitionType::Type2;
        in_root[word[x]] = true;
    }
    // Every letter of r occurs in its prefix root, so in_root is the letter set of r.
    for (std::size_t x = 0; x < word.size(); ++x) {
        if (x >= r.start && x < r.end) continue;
        if (in_root[word[x]]) return RepetitionType::Type2;
    }
    return RepetitionType::Type1;
}

} // namespace maxrep
