#include <doctest.h>

#include <cmath>
#include <random>

#include "maxrep/detect.hpp"
#include "maxrep/generate.hpp"
#include "maxrep/stats.hpp"
#include "oracle.hpp"

using namespace maxrep;

namespace {

RepetitionSet reps_of(const char* text) { return enumerate(word_from_text(text)); }

const BoundReport& row(const std::vector<BoundReport>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.name == name) return r;
    FAIL("missing bound row " << name);
    return rows.front();
}

bool has_row(const std::vector<BoundReport>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.name == name) return true;
    return false;
}

} // namespace

TEST_CASE("decremented_sum examples") {
    for (std::size_t n = 0; n <= 40; ++n)
        CHECK(decremented_sum(enumerate(unary(n))) == Rational(n == 0 ? 0 : long(n) - 1));
    CHECK(decremented_sum(enumerate(cyclic(3, 12))) == Rational(3));
    CHECK(decremented_sum(enumerate(cyclic(4, 8))) == Rational(1));
    CHECK(decremented_sum(reps_of("ab")) == 0);
    CHECK(decremented_sum(reps_of("00110011")) == Rational(17, 3));
}

TEST_CASE("filtered_sum examples") {
    SumFilter at_most_1;
    at_most_1.max_period = 1;
    CHECK(filtered_sum(reps_of("aaaa"), at_most_1) == 3);

    SumFilter at_least_4;
    at_least_4.min_period = 4;
    CHECK(filtered_sum(reps_of("00110011"), at_least_4) == 1);

    // eps above every e - 1 in the set leaves nothing.
    SumFilter steep;
    steep.min_exponent = Rational(5);
    CHECK(filtered_sum(reps_of("aaaa"), steep) == 0);
    steep.min_exponent = Rational(4);
    CHECK(filtered_sum(reps_of("aaaa"), steep) == 3);
}

TEST_CASE("invalid filters are rejected") {
    SumFilter f;
    f.min_period = 5;
    f.max_period = 2;
    CHECK_THROWS_AS(f.validate(), InputError);
    SumFilter g;
    g.min_exponent = Rational(1);
    CHECK_THROWS_AS(g.validate(), InputError);
    CHECK_THROWS_AS(count_at_least(reps_of("aa"), Rational(1)), InputError);
}

TEST_CASE("count_at_least examples") {
    CHECK(count_at_least(reps_of("00110011"), Rational(2)) == 5);
    CHECK(count_at_least(reps_of("aba"), Rational(2)) == 0);
    CHECK(count_at_least(reps_of("aaaa"), Rational(2)) == 1);
    CHECK(count_at_least(reps_of("aba"), Rational(3, 2)) == 1);
}

TEST_CASE("max_period examples") {
    CHECK(max_period(reps_of("aaaa")) == 1);
    CHECK(max_period(reps_of("00110011")) == 4);
    CHECK(max_period(RepetitionSet{}) == 0);
}

TEST_CASE("zeroes_ones_lower_terms closed form") {
    CHECK(zeroes_ones_lower_terms(4) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(zeroes_ones_lower_terms(8) == doctest::Approx(9.8).epsilon(1e-15));
    CHECK_THROWS_AS(zeroes_ones_lower_terms(6), InputError);
    CHECK_THROWS_AS(zeroes_ones_lower_terms(0), InputError);
    for (std::size_t n = 4; n <= 8192; n += 4)
        CHECK(zeroes_ones_lower_terms(n) >= nlogn_bound(n) / 8);
}

TEST_CASE("ExcessAccumulator assembles the exact sum") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const Word word = oracle::random_raw_word(rng, 2 + t % 3, rng() % 150);
        const auto reps = enumerate(word);
        ExcessAccumulator acc;
        for (const auto& r : reps) acc.add(r);
        const Rational exact = oracle::naive_sum({reps.begin(), reps.end()});
        CHECK(acc.total() == exact);
        CHECK(acc.approx() == doctest::Approx(exact.get_d()).epsilon(1e-12));
    }
}

TEST_CASE("summarize agrees with the materialised set") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        const Word word = oracle::random_raw_word(rng, 2 + t % 3, rng() % 200);
        const auto reps = enumerate(word);
        const auto s = summarize(word);
        CHECK(s.count == reps.size());
        CHECK(s.max_period == max_period(reps));
        CHECK(s.excess.total() == decremented_sum(reps));
    }
}

TEST_CASE("sum identities and monotonicity") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        const Word word = oracle::random_raw_word(rng, 2 + t % 3, 1 + rng() % 60);
        const auto reps = enumerate(word);
        const Rational total = decremented_sum(reps);
        CHECK(filtered_sum(reps, SumFilter{}) == total);
        Rational prev = 0;
        for (std::size_t p = 1; p <= word.size(); ++p) {
            SumFilter f;
            f.max_period = p;
            const Rational s = filtered_sum(reps, f);
            CHECK(s >= prev);
            prev = s;
        }
        CHECK(prev == total);
    }
}

TEST_CASE("eps-count bound: eps * count <= filtered sum <= total") {
    std::mt19937_64 rng(4);
    const Rational eps_values[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(1, 7)};
    for (int t = 0; t < 40; ++t) {
        const auto reps = enumerate(oracle::random_raw_word(rng, 2 + t % 3, rng() % 80));
        for (const auto& eps : eps_values) {
            SumFilter f;
            f.min_exponent = 1 + eps;
            const Rational fs = filtered_sum(reps, f);
            const Rational count(static_cast<unsigned long>(count_at_least(reps, 1 + eps)));
            CHECK(eps * count <= fs);
            CHECK(fs <= decremented_sum(reps));
        }
    }
}

TEST_CASE("pair bound and gap-sum bound on all short binary words") {
    for (std::size_t n = 0; n <= 12; ++n)
        for (const auto& word : oracle::every_word(2, n)) {
            const Rational s = decremented_sum(enumerate(word));
            REQUIRE(s <= oracle::pair_sum(word));
            REQUIRE(s >= oracle::naive_gap_sum(word));
        }
}

TEST_CASE("bound_report: unary word") {
    const Word a8 = unary(8);
    const auto rows = bound_report(a8, enumerate(a8));
    const auto& t1 = row(rows, "nlogn");
    CHECK(t1.measured == 7);
    CHECK(t1.bound == doctest::Approx(8 * std::log(8.0)));
    CHECK(t1.satisfied);
    CHECK_FALSE(t1.vacuous);
    CHECK(t1.slack == doctest::Approx(8 * std::log(8.0) - 7));
}

TEST_CASE("bound_report: cyclic word meets the lower bound with zero slack") {
    const Word w = word_from_text("abcabcabc");
    const auto rows = bound_report(w, enumerate(w));
    const auto& t3 = row(rows, "alphabet_lower");
    CHECK(t3.sense == BoundSense::Lower);
    CHECK(t3.measured == 2);
    CHECK(t3.bound == doctest::Approx(2.0));
    CHECK(t3.slack == doctest::Approx(0.0));
    CHECK(t3.satisfied);
}

TEST_CASE("bound_report: bounded-period row and its precondition") {
    const Word w = zeroes_ones_power(8);
    BoundParams params;
    params.p = 4;
    params.k = 2;
    const auto rows = bound_report(w, enumerate(w), params);
    const auto& t4 = row(rows, "bounded_period");
    CHECK(t4.bound == doctest::Approx(8 + 3 * 2 * 4 * (std::log(4.0) + 1)));
    CHECK(t4.satisfied);
    CHECK(row(rows, "period_at_most").satisfied);
    CHECK(row(rows, "period_at_least").satisfied);
    CHECK(row(rows, "nlogn").satisfied);

    params.p = 3;
    CHECK_THROWS_AS(bound_report(w, enumerate(w), params), PreconditionError);
}

TEST_CASE("bound_report: short words are vacuous for the n ln n bound") {
    for (const char* text : {"", "a", "aa", "ab"}) {
        const Word w = word_from_text(text);
        CHECK(row(bound_report(w, enumerate(w)), "nlogn").vacuous);
    }
}

TEST_CASE("bound_report: optional rows") {
    const Word w = word_from_text("abaababa");
    CHECK_FALSE(has_row(bound_report(w, enumerate(w)), "exponent_count"));
    BoundParams params;
    params.eps = Rational(1, 2);
    const auto rows = bound_report(w, enumerate(w), params);
    CHECK(row(rows, "exponent_count").measured ==
          Rational(static_cast<unsigned long>(count_at_least(enumerate(w), Rational(3, 2)))));
    CHECK_FALSE(has_row(rows, "bounded_period"));
    CHECK_FALSE(has_row(rows, "zeroes_ones_nlogn"));
    params.k = 1;
    CHECK_THROWS_AS(bound_report(w, enumerate(w), params), InputError);
}

TEST_CASE("bound_report adds the (0011)^m rows") {
    const Word w = zeroes_ones_power(16);
    const auto rows = bound_report(w, enumerate(w));
    CHECK(has_row(rows, "zeroes_ones_nlogn"));
    CHECK(row(rows, "zeroes_ones_nlogn").satisfied);
    CHECK(row(rows, "zeroes_ones_terms").bound == doctest::Approx(zeroes_ones_lower_terms(16)));
}

TEST_CASE("tolerance is applied on the bound side only") {
    CHECK(within_upper(Rational(10), 10.0));
    CHECK(within_upper(Rational(10), 10.0 - 1e-9));
    CHECK_FALSE(within_upper(Rational(10), 10.0 - 1e-7));
    CHECK(within_lower(Rational(10), 10.0 + 1e-9));
    CHECK_FALSE(within_lower(Rational(10), 10.0 + 1e-7));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("1/4") == Rational(1, 4));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("010") == Rational(10));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("streaming summary and bound rows match the materialised ones") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 40; ++t) {
        const Word word = oracle::random_raw_word(rng, 2 + t % 3, 3 + rng() % 100);
        const auto reps = enumerate(word);
        const Rational threshold(3, 2);
        const auto s = summarize(word, threshold);
        CHECK(s.count_at_least == count_at_least(reps, threshold));
        for (std::size_t lo = 1; lo <= 8; lo += 3)
            for (std::size_t hi = lo; hi <= 20; hi += 5) {
                SumFilter f;
                f.min_period = lo;
                f.max_period = hi;
                CHECK(s.excess.total(lo, hi) == filtered_sum(reps, f));
            }
        BoundParams params;
        params.eps = Rational(1, 4);
        params.p = word.size();
        const auto a = bound_report(word, reps, params);
        const auto b = bound_report(word, params);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].name == b[i].name);
            CHECK(a[i].measured == b[i].measured);
            CHECK(a[i].satisfied == b[i].satisfied);
        }
    }
}
