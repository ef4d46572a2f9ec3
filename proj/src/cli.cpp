#include "maxrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxrep/detect.hpp"
#include "maxrep/stats.hpp"

namespace maxrep::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    Json json;
    std::vector<Table> tables;
    int exit_code = kOk;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_table(std::ostream& out, const Table& t, Format format) {
    const char sep = format == Format::Csv ? ',' : '\t';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << sep;
            out << (format == Format::Csv ? csv_field(cells[i]) : cells[i]);
        }
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

std::string str(std::size_t v) { return std::to_string(v); }

const char* command_name(Command c) {
    switch (c) {
    case Command::Find: return "find";
    case Command::Stats: return "stats";
    case Command::Bounds: return "bounds";
    case Command::Sweep: return "sweep";
    case Command::Search: return "search";
    case Command::Classify: return "classify";
    case Command::Exchange: return "exchange";
    }
    return "?";
}

std::vector<Word> load_words(const RunConfig& c) {
    if (c.word) return {word_from_text(*c.word, c.alphabet)};
    if (c.file) {
        std::ifstream in(*c.file);
        if (!in) throw IoError("cannot read input file '" + *c.file + "'");
        std::vector<Word> words;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            try {
                words.push_back(word_from_text(line, c.alphabet));
            } catch (const InputError& e) {
                throw InputError(*c.file + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (in.bad()) throw IoError("error while reading '" + *c.file + "'");
        return words;
    }
    GeneratorSpec spec;
    spec.family = *c.gen;
    spec.n = c.n.value_or(0);
    spec.k = c.k.value_or(2);
    spec.p = c.p.value_or(4);
    spec.seed = c.seed;
    if (spec.family != Family::SquaresBlocks && spec.family != Family::Unary && !c.n)
        throw InputError(std::string("--gen ") + family_name(spec.family) + " requires --n");
    if (spec.family == Family::Unary && !c.n) throw InputError("--gen unary requires --n");
    return generate(spec);
}

Json rational_json(const Rational& q) { return to_string(q); }

Json repetition_json(const Repetition& r) {
    const auto e = exponent_of(r);
    return Json{{"start", r.start + 1},
                {"end", r.end},
                {"period", r.period},
                {"length", r.length()},
                {"exponent", e.to_string()},
                {"exponent_decimal", e.to_double()}};
}

Json word_header(const Word& w, std::size_t index) {
    return Json{{"index", index}, {"word", w.to_string()}, {"n", w.size()}, {"k", w.alphabet_size()}};
}

Report cmd_find(const RunConfig& c) {
    Report rep;
    Table t{{"word_index", "start", "end", "period", "length", "exponent", "exponent_decimal"}, {}};
    Json results = Json::array();
    const auto words = load_words(c);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const auto& w = words[wi];
        const auto reps = enumerate(w);
        Json entry = word_header(w, wi + 1);
        Json list = Json::array();
        for (const auto& r : reps) {
            list.push_back(repetition_json(r));
            const auto e = exponent_of(r);
            t.rows.push_back({str(wi + 1), str(r.start + 1), str(r.end), str(r.period),
                              str(r.length()), e.to_string(), fmt_double(e.to_double())});
        }
        entry["count"] = reps.size();
        entry["repetitions"] = std::move(list);
        results.push_back(std::move(entry));
    }
    rep.json = Json{{"command", "find"}, {"positions", "1-based inclusive"}, {"results", results}};
    rep.tables.push_back(std::move(t));
    return rep;
}

Report cmd_stats(const RunConfig& c) {
    Report rep;
    SumFilter filter;
    filter.min_period = c.min_period;
    filter.max_period = c.max_period;
    filter.validate();
    const bool filtered = c.min_period || c.max_period;

    Table t{{"word_index", "n", "k", "count", "sum", "sum_decimal", "max_period"}, {}};
    if (c.eps) t.header.insert(t.header.end(), {"eps", "count_at_least"});
    if (filtered) t.header.insert(t.header.end(), {"min_period", "max_period_filter", "filtered_sum",
                                                   "filtered_sum_decimal"});

    Json results = Json::array();
    const auto words = load_words(c);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const auto& w = words[wi];
        std::optional<Rational> threshold;
        if (c.eps) threshold = 1 + *c.eps;
        const WordSummary s = summarize(w, threshold);
        const Rational sum = s.excess.total();
        Json entry = word_header(w, wi + 1);
        entry["count"] = s.count;
        entry["sum"] = rational_json(sum);
        entry["sum_decimal"] = sum.get_d();
        entry["max_period"] = s.max_period;
        std::vector<std::string> row{str(wi + 1),   str(w.size()),  str(w.alphabet_size()),
                                     str(s.count),  to_string(sum), fmt_double(sum.get_d()),
                                     str(s.max_period)};
        if (c.eps) {
            const auto cnt = s.count_at_least;
            entry["count_at_least"] = Json{{"eps", rational_json(*c.eps)},
                                           {"threshold", rational_json(*threshold)},
                                           {"count", cnt}};
            row.push_back(to_string(*c.eps));
            row.push_back(str(cnt));
        }
        if (filtered) {
            const Rational fs = s.excess.total(c.min_period.value_or(1),
                                               c.max_period.value_or(w.size()));
            Json f{{"sum", rational_json(fs)}, {"sum_decimal", fs.get_d()}};
            f["min_period"] = c.min_period ? Json(*c.min_period) : Json(nullptr);
            f["max_period"] = c.max_period ? Json(*c.max_period) : Json(nullptr);
            entry["filtered"] = std::move(f);
            row.push_back(c.min_period ? str(*c.min_period) : "");
            row.push_back(c.max_period ? str(*c.max_period) : "");
            row.push_back(to_string(fs));
            row.push_back(fmt_double(fs.get_d()));
        }
        t.rows.push_back(std::move(row));
        results.push_back(std::move(entry));
    }
    rep.json = Json{{"command", "stats"}, {"results", results}};
    rep.tables.push_back(std::move(t));
    return rep;
}

Report cmd_bounds(const RunConfig& c) {
    Report rep;
    BoundParams params;
    params.eps = c.eps;
    params.p = c.p;
    params.k = c.k;

    Table t{{"word_index", "bound", "formula", "sense", "n", "k", "measured", "measured_decimal",
             "bound_value", "slack", "satisfied", "vacuous"},
            {}};
    Json results = Json::array();
    bool all_ok = true;
    const auto words = load_words(c);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const auto& w = words[wi];
        Json entry = word_header(w, wi + 1);
        Json rows = Json::array();
        for (const auto& b : bound_report(w, params)) {
            const char* sense = b.sense == BoundSense::Upper ? "upper" : "lower";
            rows.push_back(Json{{"bound", b.name},
                                {"formula", b.formula},
                                {"sense", sense},
                                {"measured", rational_json(b.measured)},
                                {"measured_decimal", b.measured.get_d()},
                                {"bound_value", b.bound},
                                {"slack", b.slack},
                                {"satisfied", b.satisfied},
                                {"vacuous", b.vacuous}});
            t.rows.push_back({str(wi + 1), b.name, b.formula, sense, str(b.n), str(b.k),
                              to_string(b.measured), fmt_double(b.measured.get_d()),
                              fmt_double(b.bound), fmt_double(b.slack),
                              b.satisfied ? "true" : "false", b.vacuous ? "true" : "false"});
            if (!b.vacuous && !b.satisfied) all_ok = false;
        }
        entry["bounds"] = std::move(rows);
        results.push_back(std::move(entry));
    }
    rep.json = Json{{"command", "bounds"}, {"all_satisfied", all_ok}, {"results", results}};
    rep.tables.push_back(std::move(t));
    if (!all_ok && !c.report_only) rep.exit_code = kBoundViolated;
    return rep;
}

std::size_t sweep_step(const RunConfig& c) {
    if (c.n_step) {
        if (*c.n_step == 0) throw InputError("--n-step must be positive");
        return *c.n_step;
    }
    switch (*c.gen) {
    case Family::Cyclic: return c.k.value_or(2);
    case Family::ZeroesOnesPower: return 4;
    case Family::SquaresBlocks: return 2 * c.k.value_or(2);
    default: return 1;
    }
}

Word sweep_word(const RunConfig& c, std::size_t n) {
    const std::size_t k = c.k.value_or(2);
    switch (*c.gen) {
    case Family::Cyclic: return cyclic(k, n);
    case Family::ZeroesOnesPower: return zeroes_ones_power(n);
    case Family::Unary: return unary(n);
    case Family::Random: return random_word(k, n, c.seed);
    case Family::SquaresBlocks:
        if ((2 * n) % k != 0)
            throw InputError("squares-blocks sweep: n = " + str(n) + " is not k p / 2 for any p");
        return squares_blocks(k, 2 * n / k);
    case Family::Exhaustive: break;
    }
    throw InputError("sweep does not support the exhaustive family");
}

Report cmd_sweep(const RunConfig& c) {
    if (!c.gen) throw InputError("sweep requires --gen FAMILY");
    if (!c.n_max && !c.n) throw InputError("sweep requires --n-max (or --n)");
    const std::size_t hi = c.n_max ? *c.n_max : *c.n;
    const std::size_t step = sweep_step(c);
    const std::size_t lo = c.n_min.value_or(step);
    if (lo > hi) throw InputError("--n-min exceeds --n-max");

    Report rep;
    Table t{{std::begin(kSweepColumns), std::end(kSweepColumns)}, {}};
    Json rows = Json::array();
    for (std::size_t n = lo; n <= hi; n += step) {
        const Word w = sweep_word(c, n);
        const WordSummary s = summarize(w);
        const Rational sum = s.excess.total();
        const bool t2 = *c.gen == Family::ZeroesOnesPower && n >= 4;
        const double t2v = t2 ? zeroes_ones_lower_terms(n) : 0.0;
        const double ratio = n ? double(s.count) / (double(n) * double(n)) : 0.0;
        t.rows.push_back({str(n), to_string(sum), fmt_double(sum.get_d()), std::to_string(s.count),
                          fmt_double(nlogn_bound(n)), t2 ? fmt_double(t2v) : "",
                          fmt_double(ratio)});
        rows.push_back(Json{{"n", n},
                            {"sum_exact", rational_json(sum)},
                            {"sum_decimal", sum.get_d()},
                            {"count", s.count},
                            {"nlogn_bound", nlogn_bound(n)},
                            {"zeroes_ones_lower", t2 ? Json(t2v) : Json(nullptr)},
                            {"count_over_n2", ratio}});
    }
    rep.json = Json{{"command", "sweep"},
                    {"family", family_name(*c.gen)},
                    {"columns_version", 1},
                    {"rows", rows}};
    rep.tables.push_back(std::move(t));
    return rep;
}

Report cmd_search(const RunConfig& c) {
    if (!c.k || !c.n) throw InputError("search requires --k and --n");
    const std::size_t k = *c.k, n = *c.n;
    const auto result = c.objective == Objective::Min ? search_min(k, n, c.budget)
                                                      : search_max(k, n, c.budget);

    std::string verdict = "not-applicable";
    Json prediction = nullptr;
    if (c.objective == Objective::Min) {
        Rational predicted(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        predicted.canonicalize();
        predicted -= 1;
        if (n % k == 0) {
            const Word expected = canonical_form(cyclic(k, n));
            const bool value_ok = result.optimum == predicted;
            const bool unique_ok = result.witnesses.size() == 1 && result.witnesses[0] == expected;
            verdict = value_ok && unique_ok ? "confirmed" : "refuted";
            prediction = Json{{"value", rational_json(predicted)},
                              {"witness", expected.to_string()},
                              {"value_matches", value_ok},
                              {"unique_witness_matches", unique_ok}};
        } else {
            // Only the inequality is claimed when k does not divide n.
            verdict = result.optimum >= predicted ? "bound-holds" : "refuted";
            prediction = Json{{"value", rational_json(predicted)}, {"tightness_claimed", false}};
        }
    }

    Report rep;
    Json witnesses = Json::array();
    Table w{{"witness"}, {}};
    for (const auto& x : result.witnesses) {
        witnesses.push_back(x.to_string());
        w.rows.push_back({x.to_string()});
    }
    const char* objective = c.objective == Objective::Min ? "min" : "max";
    rep.json = Json{{"command", "search"},
                    {"k", k},
                    {"n", n},
                    {"objective", objective},
                    {"optimum", rational_json(result.optimum)},
                    {"optimum_decimal", result.optimum.get_d()},
                    {"examined", result.examined},
                    {"witnesses", witnesses},
                    {"minimum_prediction", prediction},
                    {"minimum_verdict", verdict}};
    rep.tables.push_back(Table{{"k", "n", "objective", "optimum", "optimum_decimal", "examined",
                                "witness_count", "minimum_verdict"},
                               {{str(k), str(n), objective, to_string(result.optimum),
                                 fmt_double(result.optimum.get_d()), std::to_string(result.examined),
                                 str(result.witnesses.size()), verdict}}});
    rep.tables.push_back(std::move(w));
    return rep;
}

Report cmd_classify(const RunConfig& c) {
    Report rep;
    Table t{{"word_index", "start", "end", "period", "exponent", "type"}, {}};
    Table agg{{"word_index", "n", "k", "type1_count", "type1_total_length", "type1_sum",
               "type2_count", "type2_letters", "type2_sum", "disjointness"},
              {}};
    Json results = Json::array();
    const auto words = load_words(c);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        const auto& w = words[wi];
        const auto reps = enumerate(w);
        Json entry = word_header(w, wi + 1);
        Json list = Json::array();

        std::vector<Repetition> type1, type2;
        for (const auto& r : reps) {
            const auto type = classify(w, r);
            (type == RepetitionType::Type1 ? type1 : type2).push_back(r);
            Json j = repetition_json(r);
            j["type"] = to_string(type);
            list.push_back(std::move(j));
            t.rows.push_back({str(wi + 1), str(r.start + 1), str(r.end), str(r.period),
                              exponent_of(r).to_string(), to_string(type)});
        }

        // Type1 intervals must be pairwise disjoint and disjoint from Type2.
        std::vector<int> owner(w.size(), 0);
        bool disjoint = true;
        std::size_t type1_len = 0;
        for (const auto& r : type1) {
            type1_len += r.length();
            for (std::size_t x = r.start; x < r.end; ++x) {
                if (owner[x] != 0) disjoint = false;
                owner[x] = 1;
            }
        }
        std::vector<bool> covered2(w.size(), false);
        for (const auto& r : type2)
            for (std::size_t x = r.start; x < r.end; ++x) {
                if (owner[x] == 1) disjoint = false;
                covered2[x] = true;
            }
        const auto letters2 = static_cast<std::size_t>(std::count(covered2.begin(), covered2.end(), true));
        const Rational sum1 = decremented_sum(RepetitionSet(w.size(), type1));
        const Rational sum2 = decremented_sum(RepetitionSet(w.size(), type2));

        Json aggregate{{"type1_count", type1.size()},
                       {"type1_total_length", type1_len},
                       {"type1_sum", rational_json(sum1)},
                       {"type1_sum_within_n", sum1 <= Rational(static_cast<unsigned long>(w.size()))},
                       {"type2_count", type2.size()},
                       {"type2_letters", letters2},
                       {"type2_sum", rational_json(sum2)},
                       {"disjoint", disjoint}};
        if (c.p) {
            const std::size_t limit = 3 * w.alphabet_size() * *c.p;
            aggregate["type2_letter_limit"] = limit;
            aggregate["type2_letters_within_limit"] = letters2 <= limit;
        }
        entry["repetitions"] = std::move(list);
        entry["aggregate"] = std::move(aggregate);
        results.push_back(std::move(entry));
        agg.rows.push_back({str(wi + 1), str(w.size()), str(w.alphabet_size()), str(type1.size()),
                            str(type1_len), to_string(sum1), str(type2.size()), str(letters2),
                            to_string(sum2), disjoint ? "ok" : "violated"});
    }
    rep.json = Json{{"command", "classify"}, {"positions", "1-based inclusive"}, {"results", results}};
    rep.tables.push_back(std::move(t));
    rep.tables.push_back(std::move(agg));
    return rep;
}

Report cmd_exchange(const RunConfig& c) {
    Report rep;
    Table t{{"word_index", "step", "close_pair_left", "close_pair_right", "before", "after",
             "gap_sum_before", "gap_sum_after"},
            {}};
    Json results = Json::array();
    const auto words = load_words(c);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        Word w = words[wi];
        const std::size_t k = c.k.value_or(w.alphabet_size());
        Json steps = Json::array();
        for (std::size_t step = 1;; ++step) {
            const auto pair = find_close_pair(w, k);
            if (!pair) {
                if (step == 1) throw PreconditionError("exchange: '" + w.to_string() +
                                                       "' has no close pair for k = " + str(k));
                break;
            }
            const Word next = exchange_move(w, k);
            const Rational before = gap_sum(gap_profile(w));
            const Rational after = gap_sum(gap_profile(next));
            steps.push_back(Json{{"close_pair", Json::array({pair->left + 1, pair->right + 1})},
                                 {"before", w.to_string()},
                                 {"after", next.to_string()},
                                 {"gap_sum_before", rational_json(before)},
                                 {"gap_sum_after", rational_json(after)},
                                 {"decreased", after < before}});
            t.rows.push_back({str(wi + 1), str(step), str(pair->left + 1), str(pair->right + 1),
                              w.to_string(), next.to_string(), to_string(before), to_string(after)});
            w = next;
            if (!c.iterate) break;
        }
        results.push_back(Json{{"index", wi + 1}, {"k", k}, {"result", w.to_string()}, {"steps", steps}});
    }
    rep.json = Json{{"command", "exchange"}, {"positions", "1-based"}, {"results", results}};
    rep.tables.push_back(std::move(t));
    return rep;
}

} // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Maximal repetitions of exponent > 1: detection, sums, bounds and extremal search"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string word, file, gen, alphabet, eps, format = "json", objective = "min";
    std::size_t n = 0, k = 0, p = 0, min_p = 0, max_p = 0, n_min = 0, n_max = 0, n_step = 0;

    struct Sub {
        Command command;
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {Command::Find, "find", "list the maximal repetitions"},
        {Command::Stats, "stats", "decremented-exponent sum and counts"},
        {Command::Bounds, "bounds", "evaluate the upper and lower bounds"},
        {Command::Sweep, "sweep", "CSV rows over a range of n for a generator family"},
        {Command::Search, "search", "exhaustive min/max over canonical words"},
        {Command::Classify, "classify", "Type1/Type2 classification of every repetition"},
        {Command::Exchange, "exchange", "apply the gap-sum exchange move"},
    };
    std::vector<std::pair<CLI::App*, Command>> apps;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        apps.emplace_back(sub, s.command);
        auto* w = sub->add_option("--word", word, "inline word");
        auto* f = sub->add_option("--file", file, "file with one word per line");
        auto* g = sub->add_option("--gen", gen, "generator family")
                      ->check(CLI::IsMember({"cyclic", "zeroes-ones-power", "unary",
                                             "squares-blocks", "random", "exhaustive"}));
        w->excludes(f)->excludes(g);
        f->excludes(g);
        sub->add_option("--alphabet", alphabet, "explicit alphabet ordering");
        sub->add_option("--n", n, "word length");
        sub->add_option("--k", k, "alphabet size");
        sub->add_option("--p", p, "period parameter");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--eps", eps, "epsilon as a rational, e.g. 1/4");
        sub->add_option("--min-period", min_p, "only periods >= this");
        sub->add_option("--max-period", max_p, "only periods <= this");
        sub->add_option("--format", format, "json | tsv | csv")
            ->check(CLI::IsMember({"json", "tsv", "csv"}));
        sub->add_option("--budget", cfg.budget, "maximum number of words to evaluate");
        sub->add_option("--n-min", n_min, "sweep: first n");
        sub->add_option("--n-max", n_max, "sweep: last n");
        sub->add_option("--n-step", n_step, "sweep: increment");
        sub->add_option("--objective", objective, "search: min | max")
            ->check(CLI::IsMember({"min", "max"}));
        sub->add_flag("--report-only", cfg.report_only, "bounds: exit 0 even if a bound fails");
        sub->add_flag("--iterate", cfg.iterate, "exchange: repeat until no close pair remains");
    }

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw InputError(e.what());
    }

    CLI::App* chosen = nullptr;
    for (auto& [sub, command] : apps)
        if (sub->parsed()) {
            chosen = sub;
            cfg.command = command;
        }
    auto given = [&](const char* name) { return chosen->count(name) > 0; };

    if (given("--word")) cfg.word = word;
    if (given("--file")) cfg.file = file;
    if (given("--gen")) cfg.gen = parse_family(gen);
    if (given("--alphabet")) cfg.alphabet = alphabet;
    if (given("--n")) cfg.n = n;
    if (given("--k")) cfg.k = k;
    if (given("--p")) cfg.p = p;
    if (given("--min-period")) cfg.min_period = min_p;
    if (given("--max-period")) cfg.max_period = max_p;
    if (given("--n-min")) cfg.n_min = n_min;
    if (given("--n-max")) cfg.n_max = n_max;
    if (given("--n-step")) cfg.n_step = n_step;
    if (given("--eps")) {
        cfg.eps = parse_rational(eps);
        if (*cfg.eps <= 0) throw InputError("--eps must be positive");
    }
    cfg.format = format == "tsv" ? Format::Tsv : format == "csv" ? Format::Csv : Format::Json;
    cfg.objective = objective == "max" ? Objective::Max : Objective::Min;

    const int sources = int(cfg.word.has_value()) + int(cfg.file.has_value()) + int(cfg.gen.has_value());
    const bool needs_word = cfg.command != Command::Search && cfg.command != Command::Sweep;
    if (needs_word && sources != 1)
        throw InputError(std::string(command_name(cfg.command)) +
                         " needs exactly one of --word, --file, --gen");
    if (cfg.k && *cfg.k == 0) throw InputError("--k must be positive");
    return cfg;
}

int run(const RunConfig& config, std::ostream& out) {
    Report rep;
    switch (config.command) {
    case Command::Find: rep = cmd_find(config); break;
    case Command::Stats: rep = cmd_stats(config); break;
    case Command::Bounds: rep = cmd_bounds(config); break;
    case Command::Sweep: rep = cmd_sweep(config); break;
    case Command::Search: rep = cmd_search(config); break;
    case Command::Classify: rep = cmd_classify(config); break;
    case Command::Exchange: rep = cmd_exchange(config); break;
    }
    if (config.format == Format::Json) {
        out << rep.json.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < rep.tables.size(); ++i) {
            if (i) out << '\n';
            write_table(out, rep.tables[i], config.format);
        }
    }
    return rep.exit_code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto cfg = parse_args(args, out);
        if (!cfg) return kOk;
        return run(*cfg, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kResourceError;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    }
}

} // namespace maxrep::cli
