#include "maxrep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "maxrep/detect.hpp"

namespace maxrep {

void SumFilter::validate() const {
    if (min_period && max_period && *min_period > *max_period)
        throw InputError("min_period " + std::to_string(*min_period) + " exceeds max_period " +
                         std::to_string(*max_period));
    if (min_exponent && *min_exponent <= 1)
        throw InputError("min_exponent must be greater than 1, got " + to_string(*min_exponent));
}

namespace {

// |r| / p >= a / b  <=>  |r| * b >= a * p
bool exponent_at_least(const Repetition& r, const Rational& t) {
    if (t.get_num().fits_ulong_p() && t.get_den().fits_ulong_p()) {
        using u128 = unsigned __int128;
        return u128(r.length()) * t.get_den().get_ui() >= u128(t.get_num().get_ui()) * r.period;
    }
    return mpz_class(std::to_string(r.length())) * t.get_den() >=
           t.get_num() * mpz_class(std::to_string(r.period));
}

} // namespace

bool SumFilter::accepts(const Repetition& r) const {
    if (min_period && r.period < *min_period) return false;
    if (max_period && r.period > *max_period) return false;
    if (min_exponent && !exponent_at_least(r, *min_exponent)) return false;
    return true;
}

void ExcessAccumulator::add(std::size_t period, std::uint64_t excess) {
    if (period >= by_period_.size()) by_period_.resize(period + 1, 0);
    by_period_[period] += excess;
}

Rational ExcessAccumulator::total() const { return total(1, by_period_.size()); }

Rational ExcessAccumulator::total(std::size_t min_period, std::size_t max_period) const {
    const std::size_t lo = std::max<std::size_t>(min_period, 1);
    const std::size_t hi = std::min(max_period, by_period_.size() ? by_period_.size() - 1 : 0);
    mpz_class denom = 1;
    for (std::size_t p = lo; p <= hi; ++p)
        if (by_period_[p] != 0) mpz_lcm_ui(denom.get_mpz_t(), denom.get_mpz_t(), p);
    mpz_class num = 0;
    mpz_class share;
    for (std::size_t p = lo; p <= hi; ++p) {
        if (by_period_[p] == 0) continue;
        mpz_divexact_ui(share.get_mpz_t(), denom.get_mpz_t(), p);
        mpz_addmul(num.get_mpz_t(), share.get_mpz_t(),
                   mpz_class(std::to_string(by_period_[p])).get_mpz_t());
    }
    Rational q(num, denom);
    q.canonicalize();
    return q;
}

double ExcessAccumulator::approx() const {
    long double sum = 0, comp = 0;
    for (std::size_t p = 1; p < by_period_.size(); ++p) {
        if (by_period_[p] == 0) continue;
        const long double term = static_cast<long double>(by_period_[p]) / p - comp;
        const long double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    return static_cast<double>(sum);
}

WordSummary summarize(const Word& word, const std::optional<Rational>& threshold) {
    WordSummary s;
    s.n = word.size();
    if (threshold) {
        SumFilter f;
        f.min_exponent = threshold;
        f.validate();
        s.threshold = threshold;
    }
    scan_maximal_repetitions(word, [&](std::size_t period, std::span<const Repetition> reps) {
        std::uint64_t excess = 0;
        for (const auto& r : reps) excess += r.excess();
        s.excess.add(period, excess);
        s.count += reps.size();
        s.max_period = period;
        if (threshold)
            for (const auto& r : reps) s.count_at_least += exponent_at_least(r, *threshold);
    });
    return s;
}

WordSummary summarize(const RepetitionSet& reps, const std::optional<Rational>& threshold) {
    WordSummary s;
    s.n = reps.word_length();
    s.count = reps.size();
    s.max_period = max_period(reps);
    for (const auto& r : reps) s.excess.add(r);
    if (threshold) {
        s.threshold = threshold;
        s.count_at_least = count_at_least(reps, *threshold);
    }
    return s;
}

Rational decremented_sum(const RepetitionSet& reps) {
    ExcessAccumulator acc;
    for (const auto& r : reps) acc.add(r);
    return acc.total();
}

Rational filtered_sum(const RepetitionSet& reps, const SumFilter& filter) {
    filter.validate();
    ExcessAccumulator acc;
    for (const auto& r : reps)
        if (filter.accepts(r)) acc.add(r);
    return acc.total();
}

std::size_t count_at_least(const RepetitionSet& reps, const Rational& threshold) {
    SumFilter f;
    f.min_exponent = threshold;
    f.validate();
    return static_cast<std::size_t>(
        std::count_if(reps.begin(), reps.end(), [&](const Repetition& r) { return f.accepts(r); }));
}

std::size_t max_period(const RepetitionSet& reps) {
    std::size_t m = 0;
    for (const auto& r : reps) m = std::max(m, r.period);
    return m;
}

double zeroes_ones_lower_terms(std::size_t n) {
    if (n < 4 || n % 4 != 0)
        throw InputError("zeroes_ones_lower_terms: n must be a positive multiple of 4, got " +
                         std::to_string(n));
    const double q = static_cast<double>(n / 4);
    double terms = 0;
    for (std::size_t i = 1; i <= n / 4; ++i)
        terms += (q - static_cast<double>(i) + 1) / (4.0 * static_cast<double>(i) - 3);
    return (q - 1) + 4 * terms;
}

double nlogn_bound(std::size_t n) {
    return n == 0 ? 0.0 : static_cast<double>(n) * std::log(static_cast<double>(n));
}

double period_at_most_bound(std::size_t n, std::size_t p) {
    return static_cast<double>(n) * (std::log(static_cast<double>(p)) + 1);
}

double period_at_least_bound(std::size_t n, std::size_t p) {
    return static_cast<double>(n) * std::log(static_cast<double>(n) / static_cast<double>(p));
}

double bounded_period_bound(std::size_t n, std::size_t k, std::size_t p) {
    return static_cast<double>(n) +
           3.0 * static_cast<double>(k) * static_cast<double>(p) *
               (std::log(static_cast<double>(p)) + 1);
}

bool within_upper(const Rational& measured, double bound) {
    return measured <= Rational(bound + kBoundTolerance * std::fabs(bound));
}

bool within_lower(const Rational& measured, double bound) {
    return measured >= Rational(bound - kBoundTolerance * std::fabs(bound));
}

namespace {

bool is_zeroes_ones_shape(const Word& w) {
    const std::size_t n = w.size();
    if (n < 4 || n % 4 != 0) return false;
    if (!(w[0] == w[1] && w[2] == w[3] && w[0] != w[2])) return false;
    for (std::size_t i = 4; i < n; ++i)
        if (w[i] != w[i - 4]) return false;
    return true;
}

BoundReport make_row(std::string name, std::string formula, BoundSense sense, std::size_t n,
                     std::size_t k, Rational measured, double bound) {
    BoundReport row;
    row.name = std::move(name);
    row.formula = std::move(formula);
    row.sense = sense;
    row.n = n;
    row.k = k;
    row.bound = bound;
    row.slack = bound - measured.get_d();
    row.satisfied = sense == BoundSense::Upper ? within_upper(measured, bound)
                                               : within_lower(measured, bound);
    row.measured = std::move(measured);
    return row;
}

void check_params(const Word& word, const BoundParams& params) {
    std::set<Symbol> used(word.symbols().begin(), word.symbols().end());
    const std::size_t k = params.k.value_or(word.alphabet_size());
    if (k == 0) throw InputError("alphabet size k must be positive");
    if (k < used.size())
        throw InputError("k = " + std::to_string(k) + " is smaller than the " +
                         std::to_string(used.size()) + " distinct letters of the word");
    if (params.p && *params.p == 0) throw InputError("period bound p must be positive");
    if (params.eps && *params.eps <= 0) throw InputError("eps must be positive");
}

std::optional<Rational> threshold_of(const BoundParams& params) {
    if (!params.eps) return std::nullopt;
    return Rational(1 + *params.eps);
}

std::vector<BoundReport> bound_rows(const Word& word, const WordSummary& summary,
                                    const BoundParams& params) {
    const std::size_t n = word.size();
    const std::size_t k = params.k.value_or(word.alphabet_size());

    const Rational sum = summary.excess.total();
    std::vector<BoundReport> rows;

    auto t1 = make_row("nlogn", "n ln n", BoundSense::Upper, n, k, sum, nlogn_bound(n));
    t1.vacuous = n <= 2;
    rows.push_back(std::move(t1));

    if (params.p) {
        const std::size_t p = *params.p;
        rows.push_back(make_row("period_at_most", "n (ln p + 1)", BoundSense::Upper, n, k,
                                summary.excess.total(1, p), period_at_most_bound(n, p)));

        const bool outside = n == 0 || p > n;
        auto c1a = make_row("period_at_least", "n ln(n / p)", BoundSense::Upper, n, k,
                            summary.excess.total(p, n),
                            outside ? 0.0 : period_at_least_bound(n, p));
        c1a.vacuous = outside;
        rows.push_back(std::move(c1a));
    }

    if (params.eps) {
        const std::uint64_t count = summary.count_at_least;
        auto c2 = make_row("exponent_count", "n ln n / eps", BoundSense::Upper, n, k,
                           Rational(static_cast<unsigned long>(count)),
                           nlogn_bound(n) / params.eps->get_d());
        c2.vacuous = n <= 2;
        rows.push_back(std::move(c2));
    }

    rows.push_back(make_row("alphabet_lower", "n / k - 1", BoundSense::Lower, n, k, sum,
                            static_cast<double>(n) / static_cast<double>(k) - 1));

    if (params.p) {
        const std::size_t p = *params.p;
        const std::size_t observed = summary.max_period;
        if (observed > p)
            throw PreconditionError("bounded_period requires every period <= p = " + std::to_string(p) +
                                    ", but the word has a repetition of period " +
                                    std::to_string(observed));
        rows.push_back(make_row("bounded_period", "n + 3kp (ln p + 1)", BoundSense::Upper, n, k, sum,
                                bounded_period_bound(n, k, p)));
    }

    if (is_zeroes_ones_shape(word)) {
        rows.push_back(make_row("zeroes_ones_nlogn", "n ln n / 8", BoundSense::Lower, n, k, sum,
                                nlogn_bound(n) / 8));
        rows.push_back(make_row("zeroes_ones_terms",
                                "(n/4 - 1) + 4 sum_i (n/4 - i + 1) / (4i - 3)",
                                BoundSense::Lower, n, k, sum, zeroes_ones_lower_terms(n)));
    }
    return rows;
}

} // namespace

std::vector<BoundReport> bound_report(const Word& word, const RepetitionSet& reps,
                                      const BoundParams& params) {
    check_params(word, params);
    return bound_rows(word, summarize(reps, threshold_of(params)), params);
}

std::vector<BoundReport> bound_report(const Word& word, const BoundParams& params) {
    check_params(word, params);
    return bound_rows(word, summarize(word, threshold_of(params)), params);
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return InputError("not a rational number: '" + text + "'"); };
    if (text.empty()) throw bad();
    try {
        const auto slash = text.find('/');
        const auto dot = text.find('.');
        if (slash != std::string::npos) {
            Rational q(mpz_class(text.substr(0, slash), 10), mpz_class(text.substr(slash + 1), 10));
            if (q.get_den() == 0) throw bad();
            q.canonicalize();
            return q;
        }
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t scale = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") throw bad();
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
            Rational q(mpz_class(digits, 10), den);
            q.canonicalize();
            return q;
        }
        return Rational(mpz_class(text, 10));
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

} // namespace maxrep
