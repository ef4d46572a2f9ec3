#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxrep/word.hpp"

namespace maxrep {

/// (a_1 a_2 ... a_k)^{n/k}; requires k | n.
Word cyclic(std::size_t k, std::size_t n);
/// (0011)^{n/4} over a binary alphabet; requires 4 | n.
Word zeroes_ones_power(std::size_t n);
/// a^n over a unary alphabet.
Word unary(std::size_t n);
/// (a_1 a_1 a_2 a_2)^{p/4} (a_3 a_3 a_4 a_4)^{p/4} ... with k/2 blocks, length kp/2.
/// Requires 4 | p and k even.
Word squares_blocks(std::size_t k, std::size_t p);
/// Uniform over A_k^n, reproducible from seed on every platform.
Word random_word(std::size_t k, std::size_t n, std::uint64_t seed);

/// Renames letters so that first occurrences appear in increasing order.
Word canonical_form(const Word& w);
bool is_canonical(const Word& w);

/// Number of canonical words of length n over k letters (sum of Stirling
/// numbers of the second kind), saturating at UINT64_MAX.
std::uint64_t canonical_word_count(std::size_t k, std::size_t n);

/// Canonical words of length n over A_k in lexicographic order: one
/// representative per letter-permutation class.
///
///     for (CanonicalWords it(2, 4); !it.done(); it.next()) use(it.word());
class CanonicalWords {
public:
    CanonicalWords(std::size_t k, std::size_t n);

    bool done() const noexcept { return done_; }
    /// Raw symbols of the current word.
    const std::vector<Symbol>& symbols() const noexcept { return cur_; }
    Word word() const { return Word(cur_, k_); }
    void next();

private:
    std::size_t k_;
    std::vector<Symbol> cur_;
    // prefix_max_[i] = max symbol in cur_[0..i)
    std::vector<Symbol> prefix_max_;
    bool done_ = false;
};

std::vector<Word> all_words(std::size_t k, std::size_t n);

enum class Family { Cyclic, ZeroesOnesPower, Unary, SquaresBlocks, Random, Exhaustive };

std::optional<Family> parse_family(const std::string& name);
const char* family_name(Family f) noexcept;

struct GeneratorSpec {
    Family family = Family::Unary;
    std::size_t n = 0;
    std::size_t k = 2;
    std::size_t p = 4;
    std::uint64_t seed = 0;
};

/// Words described by the parameters: a single word for every family except
/// Exhaustive, which yields all canonical words of length n over A_k.
/// For SquaresBlocks the word is squares_blocks(k, p) and n is ignored.
std::vector<Word> generate(const GeneratorSpec& spec);

} // namespace maxrep
