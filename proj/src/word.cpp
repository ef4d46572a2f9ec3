#include "maxrep/word.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

namespace maxrep {

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size,
           std::vector<char32_t> display)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size), display_(std::move(display)) {
    if (alphabet_size_ == 0)
        throw InputError("alphabet size must be at least 1");
    if (!display_.empty() && display_.size() != alphabet_size_)
        throw InputError("display table size differs from alphabet size");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= alphabet_size_)
            throw InputError("symbol " + std::to_string(symbols_[i]) + " at position " +
                             std::to_string(i + 1) + " is outside alphabet of size " +
                             std::to_string(alphabet_size_));
    }
}

char32_t default_glyph(Symbol s) {
    if (s < 10) return U'0' + s;
    if (s < 36) return U'a' + (s - 10);
    if (s < 62) return U'A' + (s - 36);
    // Past 62 symbols fall back to a private-use code point.
    return 0xE000 + s;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_)
        out += encode_utf8(display_.empty() ? default_glyph(s) : display_[s]);
    return out;
}

std::string encode_utf8(char32_t c) {
    std::string out;
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
    return out;
}

std::vector<char32_t> decode_utf8(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        auto lead = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        char32_t c;
        if (lead < 0x80) {
            extra = 0;
            c = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            c = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            c = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            c = lead & 0x07;
        } else {
            throw InputError("invalid UTF-8 lead byte at byte offset " + std::to_string(i));
        }
        if (i + extra >= text.size() && extra > 0)
            throw InputError("truncated UTF-8 sequence at byte offset " + std::to_string(i));
        for (std::size_t t = 1; t <= extra; ++t) {
            auto b = static_cast<unsigned char>(text[i + t]);
            if ((b & 0xC0) != 0x80)
                throw InputError("invalid UTF-8 continuation byte at byte offset " +
                                 std::to_string(i + t));
            c = (c << 6) | (b & 0x3F);
        }
        out.push_back(c);
        i += extra + 1;
    }
    return out;
}

Word word_from_text(std::string_view text, std::optional<std::string_view> alphabet) {
    const auto chars = decode_utf8(text);
    std::unordered_map<char32_t, Symbol> index;
    std::vector<char32_t> display;

    if (alphabet) {
        for (char32_t c : decode_utf8(*alphabet)) {
            if (index.contains(c))
                throw InputError("alphabet lists character '" + encode_utf8(c) + "' twice");
            index.emplace(c, static_cast<Symbol>(display.size()));
            display.push_back(c);
        }
        if (display.empty())
            throw InputError("declared alphabet is empty");
    }

    std::vector<Symbol> symbols;
    symbols.reserve(chars.size());
    for (std::size_t pos = 0; pos < chars.size(); ++pos) {
        char32_t c = chars[pos];
        auto it = index.find(c);
        if (it == index.end()) {
            if (alphabet)
                throw InputError("character '" + encode_utf8(c) + "' at position " +
                                 std::to_string(pos + 1) + " is not in the declared alphabet");
            it = index.emplace(c, static_cast<Symbol>(display.size())).first;
            display.push_back(c);
        }
        symbols.push_back(it->second);
    }

    if (display.empty()) return Word(std::move(symbols), 1);
    const std::size_t k = display.size();
    return Word(std::move(symbols), k, std::move(display));
}

Exponent::Exponent(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
    if (den_ == 0) throw InputError("exponent denominator must be positive");
}

Rational Exponent::value() const {
    Rational q(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
    q.canonicalize();
    return q;
}

std::string Exponent::to_string() const {
    const auto g = std::gcd(num_, den_);
    return std::to_string(num_ / g) + "/" + std::to_string(den_ / g);
}

Exponent exponent_of(const Repetition& r) {
    return Exponent(r.length(), r.period);
}

RepetitionSet::RepetitionSet(std::size_t word_length, std::vector<Repetition> reps)
    : word_length_(word_length), reps_(std::move(reps)) {
    std::sort(reps_.begin(), reps_.end());
    reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
}

bool RepetitionSet::contains(const Repetition& r) const {
    return std::binary_search(reps_.begin(), reps_.end(), r);
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
    // mpf keeps the conversion exact enough for very large numerators where
    // a plain double would overflow.
    mpf_class f(q, 256);
    mp_exp_t exp = 0;
    std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    if (mant.empty()) return "0";
    bool neg = mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(exp)) + "." +
              mant.substr(static_cast<std::size_t>(exp));
    }
    return neg ? "-" + out : out;
}

} // namespace maxrep
