#include <doctest.h>

#include <random>

#include "maxrep/detect.hpp"
#include "maxrep/extremal.hpp"
#include "maxrep/generate.hpp"
#include "maxrep/stats.hpp"
#include "oracle.hpp"

using namespace maxrep;

namespace {

Word w(const char* text) { return word_from_text(text); }

Rational gaps(const Word& word) { return gap_sum(gap_profile(word)); }

} // namespace

TEST_CASE("gap_profile examples") {
    const auto g = gap_profile(w("abcab"));
    REQUIRE(g.gaps.size() == 3);
    CHECK(g.gaps[0] == std::vector<std::size_t>{3});
    CHECK(g.gaps[1] == std::vector<std::size_t>{3});
    CHECK(g.gaps[2].empty());
    CHECK(gaps(w("abcab")) == Rational(2, 3));
    CHECK(gaps(w("abba")) == Rational(4, 3));
    CHECK(gaps(w("aaaa")) == 3);
    CHECK(gaps(w("")) == 0);
}

TEST_CASE("gap_sum agrees with the naive pass and stays below the sum") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const Word word = oracle::random_raw_word(rng, 2 + t % 4, rng() % 120);
        CHECK(gaps(word) == oracle::naive_gap_sum(word));
        CHECK(gaps(word) <= decremented_sum(enumerate(word)));
    }
}

TEST_CASE("cyclic words have gap sum n/k - 1") {
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t n = k; n <= 40; n += k)
            CHECK(gaps(cyclic(k, n)) == Rational(static_cast<long>(n / k)) - 1);
}

TEST_CASE("find_close_pair examples") {
    CHECK(find_close_pair(w("abcacb"), 3) == ClosePair{2, 4});
    CHECK(find_close_pair(w("aab"), 2) == ClosePair{0, 1});
    CHECK_FALSE(find_close_pair(w("abcabc"), 3).has_value());
    CHECK(find_close_pair(w("abcabc"), 4) == ClosePair{0, 3});
    CHECK_THROWS_AS(find_close_pair(w("ab"), 1), InputError);
}

TEST_CASE("exchange_move examples") {
    CHECK(exchange_move(w("abcacb"), 3).to_string() == "abcabc");
    CHECK(gaps(w("abcacb")) == Rational(13, 12));
    CHECK(gaps(w("abcabc")) == 1);
    CHECK(exchange_move(w("ababb"), 2).to_string() == "ababa");
    CHECK_THROWS_AS(exchange_move(w("aab"), 2), PreconditionError);
    CHECK_THROWS_AS(exchange_move(w("abcabc"), 3), PreconditionError);
    CHECK_THROWS_AS(exchange_move(w("abab"), 2), PreconditionError);
    // symbol outside A_k
    CHECK_THROWS_AS(exchange_move(w("abcaa"), 2), PreconditionError);
}

TEST_CASE("exchange_move strictly lowers the gap sum until no close pair is left") {
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t n = k + 1; n <= 12; ++n)
            for (const auto& start : all_words(k, n)) {
                bool distinct = true;
                for (std::size_t i = 0; i < k; ++i) distinct = distinct && start[i] == i;
                if (!distinct) continue;
                Word cur = start;
                Rational g = gaps(cur);
                std::size_t steps = 0;
                while (find_close_pair(cur, k)) {
                    const Word next = exchange_move(cur, k);
                    REQUIRE(next.size() == cur.size());
                    REQUIRE(next.alphabet_size() == cur.alphabet_size());
                    const Rational g2 = gaps(next);
                    REQUIRE(g2 < g);
                    g = g2;
                    cur = next;
                    REQUIRE(++steps <= n * n);
                }
                // every window of k letters is now distinct
                for (std::size_t i = 0; i < n; ++i) REQUIRE(cur[i] == i % k);
            }
}

TEST_CASE("search_min examples") {
    const auto r = search_min(2, 4);
    CHECK(r.optimum == 1);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].to_string() == "0101");
    CHECK(r.examined == 8);

    const auto t = search_min(3, 6);
    CHECK(t.optimum == 1);
    REQUIRE(t.witnesses.size() == 1);
    CHECK(t.witnesses[0].to_string() == "012012");
}

TEST_CASE("search_max examples") {
    const auto r = search_max(2, 4);
    CHECK(r.objective == Objective::Max);
    CHECK(r.optimum == 3);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].to_string() == "0000");
}

TEST_CASE("search respects the budget") {
    CHECK_THROWS_AS(search_min(2, 30, 1000), ResourceError);
    CHECK_NOTHROW(search_min(2, 10, 512));
    CHECK_THROWS_AS(search_min(2, 10, 511), ResourceError);
}

TEST_CASE("minimum equals n/k - 1 and the cyclic word attains it") {
    auto check = [](std::size_t k, std::size_t n) {
        const auto r = search_min(k, n);
        CHECK(r.optimum == Rational(static_cast<long>(n / k)) - 1);
        bool found = false;
        for (const auto& x : r.witnesses) found = found || x == cyclic(k, n);
        CHECK(found);
        // brute force over all k^n words for the smallest cases
        if (n <= 8) {
            Rational best = -1;
            for (const auto& x : oracle::every_word(k, n)) {
                const Rational s = oracle::naive_sum(oracle::naive_maximal_repetitions(x));
                if (best < 0 || s < best) best = s;
            }
            CHECK(best == r.optimum);
        }
    };
    for (std::size_t n = 2; n <= 14; n += 2) check(2, n);
    for (std::size_t n = 3; n <= 9; n += 3) check(3, n);
}
