#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace maxrep {

using Symbol = std::uint32_t;
using Rational = mpq_class;

// Error taxonomy shared by the library and the command-line front end.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite word over the alphabet {0, ..., k-1}.
///
/// The alphabet size is part of the value: a word over {0,1,2} that only
/// uses 0 and 1 still has alphabet_size() == 3. An optional display table
/// maps symbol ids back to the characters the word was read from.
class Word {
public:
    Word() : alphabet_size_(1) {}
    Word(std::vector<Symbol> symbols, std::size_t alphabet_size,
         std::vector<char32_t> display = {});

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const std::vector<char32_t>& display_table() const noexcept { return display_; }

    /// Renders the word with its display table, or with the default symbol
    /// glyphs (0-9, then a-z, then A-Z) when there is none.
    std::string to_string() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_size_ == b.alphabet_size_ && a.symbols_ == b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_;
    std::vector<char32_t> display_;
};

/// Encodes UTF-8 text as a word. Without an explicit alphabet, symbols are
/// numbered in order of first occurrence and k is the number of distinct
/// characters (at least 1, so the empty word has k = 1).
Word word_from_text(std::string_view text,
                    std::optional<std::string_view> alphabet = std::nullopt);

/// Default glyph for a symbol id when no display table is present.
char32_t default_glyph(Symbol s);

std::string encode_utf8(char32_t c);
std::vector<char32_t> decode_utf8(std::string_view text);

/// Occurrence of a subword with a period strictly below its length.
/// Positions are 0-based; the interval is [start, end).
struct Repetition {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t period = 1;

    std::size_t length() const noexcept { return end - start; }
    /// |r| - p, the number of period-p letter matches inside r.
    std::size_t excess() const noexcept { return end - start - period; }

    friend auto operator<=>(const Repetition&, const Repetition&) = default;
};

/// Exact exponent |r| / p. Comparisons cross-multiply, no rounding.
class Exponent {
public:
    Exponent(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }
    Rational value() const;
    double to_double() const noexcept { return double(num_) / double(den_); }
    /// Reduced "num/den" form.
    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
        return static_cast<unsigned __int128>(a.num_) * b.den_ ==
               static_cast<unsigned __int128>(b.num_) * a.den_;
    }
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
        return static_cast<unsigned __int128>(a.num_) * b.den_ <=>
               static_cast<unsigned __int128>(b.num_) * a.den_;
    }

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

Exponent exponent_of(const Repetition& r);

/// Sorted, duplicate-free collection of maximal repetitions of one word.
class RepetitionSet {
public:
    RepetitionSet() = default;
    RepetitionSet(std::size_t word_length, std::vector<Repetition> reps);

    std::size_t word_length() const noexcept { return word_length_; }
    std::size_t size() const noexcept { return reps_.size(); }
    bool empty() const noexcept { return reps_.empty(); }
    auto begin() const noexcept { return reps_.begin(); }
    auto end() const noexcept { return reps_.end(); }
    const Repetition& operator[](std::size_t i) const noexcept { return reps_[i]; }
    std::span<const Repetition> items() const noexcept { return reps_; }

    bool contains(const Repetition& r) const;

    friend bool operator==(const RepetitionSet&, const RepetitionSet&) = default;

private:
    std::size_t word_length_ = 0;
    std::vector<Repetition> reps_;
};

std::string to_string(const Rational& q);
/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& q, int digits = 12);

} // namespace maxrep
