#include "maxrep/generate.hpp"

#include <limits>
#include <random>

namespace maxrep {

Word cyclic(std::size_t k, std::size_t n) {
    if (k == 0) throw InputError("cyclic: k must be positive");
    if (n % k != 0)
        throw InputError("cyclic: k = " + std::to_string(k) + " does not divide n = " +
                         std::to_string(n));
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(i % k);
    return Word(std::move(s), k);
}

Word zeroes_ones_power(std::size_t n) {
    if (n % 4 != 0)
        throw InputError("zeroes_ones_power: n = " + std::to_string(n) + " is not a multiple of 4");
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (i % 4) < 2 ? 0 : 1;
    return Word(std::move(s), 2);
}

Word unary(std::size_t n) {
    return Word(std::vector<Symbol>(n, 0), 1);
}

Word squares_blocks(std::size_t k, std::size_t p) {
    if (k == 0 || k % 2 != 0)
        throw InputError("squares_blocks: k = " + std::to_string(k) + " must be positive and even");
    if (p == 0 || p % 4 != 0)
        throw InputError("squares_blocks: p = " + std::to_string(p) +
                         " must be a positive multiple of 4");
    std::vector<Symbol> s;
    s.reserve(k * p / 2);
    for (std::size_t t = 0; t < k / 2; ++t) {
        const auto a = static_cast<Symbol>(2 * t);
        for (std::size_t rep = 0; rep < p / 4; ++rep) {
            s.push_back(a);
            s.push_back(a);
            s.push_back(a + 1);
            s.push_back(a + 1);
        }
    }
    return Word(std::move(s), k);
}

Word random_word(std::size_t k, std::size_t n, std::uint64_t seed) {
    if (k == 0) throw InputError("random_word: k must be positive");
    // std::uniform_int_distribution is implementation-defined; rejection
    // sampling on the raw engine output keeps words identical across libraries.
    std::mt19937_64 rng(seed);
    const std::uint64_t range = k;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::vector<Symbol> s(n);
    for (auto& x : s) {
        std::uint64_t v;
        do v = rng(); while (v >= limit);
        x = static_cast<Symbol>(v % range);
    }
    return Word(std::move(s), k);
}

Word canonical_form(const Word& w) {
    std::vector<Symbol> rename(w.alphabet_size(), std::numeric_limits<Symbol>::max());
    Symbol next = 0;
    std::vector<Symbol> s(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto& r = rename[w[i]];
        if (r == std::numeric_limits<Symbol>::max()) r = next++;
        s[i] = r;
    }
    return Word(std::move(s), w.alphabet_size());
}

bool is_canonical(const Word& w) {
    Symbol next = 0;
    for (Symbol c : w.symbols()) {
        if (c > next) return false;
        if (c == next) ++next;
    }
    return true;
}

std::uint64_t canonical_word_count(std::size_t k, std::size_t n) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (n == 0) return 1;
    // stirling[j] = S(m, j) for the current length m
    std::vector<std::uint64_t> stirling(k + 1, 0);
    stirling[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = std::min(m, k); j >= 1; --j) {
            const unsigned __int128 v =
                static_cast<unsigned __int128>(j) * stirling[j] + stirling[j - 1];
            stirling[j] = v > kMax ? kMax : static_cast<std::uint64_t>(v);
        }
        stirling[0] = 0;
    }
    unsigned __int128 total = 0;
    for (std::size_t j = 1; j <= k; ++j) total += stirling[j];
    return total > kMax ? kMax : static_cast<std::uint64_t>(total);
}

CanonicalWords::CanonicalWords(std::size_t k, std::size_t n)
    : k_(k), cur_(n, 0), prefix_max_(n + 1, 0) {
    if (k == 0) throw InputError("all_words: k must be positive");
}

void CanonicalWords::next() {
    if (done_) return;
    const std::size_t n = cur_.size();
    // Restricted growth strings: cur_[i] <= 1 + max(cur_[0..i)), capped at k-1.
    // Position 0 is always 0.
    std::size_t i = n;
    while (i > 1) {
        --i;
        const Symbol ceiling = std::min<Symbol>(prefix_max_[i] + 1, static_cast<Symbol>(k_ - 1));
        if (cur_[i] < ceiling) {
            ++cur_[i];
            prefix_max_[i + 1] = std::max(prefix_max_[i], cur_[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                cur_[j] = 0;
                prefix_max_[j + 1] = prefix_max_[j];
            }
            return;
        }
    }
    done_ = true;
}

std::vector<Word> all_words(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    for (CanonicalWords it(k, n); !it.done(); it.next()) out.push_back(it.word());
    return out;
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "cyclic") return Family::Cyclic;
    if (name == "zeroes-ones-power") return Family::ZeroesOnesPower;
    if (name == "unary") return Family::Unary;
    if (name == "squares-blocks") return Family::SquaresBlocks;
    if (name == "random") return Family::Random;
    if (name == "exhaustive") return Family::Exhaustive;
    return std::nullopt;
}

const char* family_name(Family f) noexcept {
    switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::ZeroesOnesPower: return "zeroes-ones-power";
    case Family::Unary: return "unary";
    case Family::SquaresBlocks: return "squares-blocks";
    case Family::Random: return "random";
    case Family::Exhaustive: return "exhaustive";
    }
    return "?";
}

std::vector<Word> generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case Family::Cyclic: return {cyclic(spec.k, spec.n)};
    case Family::ZeroesOnesPower: return {zeroes_ones_power(spec.n)};
    case Family::Unary: return {unary(spec.n)};
    case Family::SquaresBlocks: return {squares_blocks(spec.k, spec.p)};
    case Family::Random: return {random_word(spec.k, spec.n, spec.seed)};
    case Family::Exhaustive: return all_words(spec.k, spec.n);
    }
    return {};
}

} // namespace maxrep
