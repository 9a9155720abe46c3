/* acceptance.cc -- end-to-end acceptance checks; one PASS/FAIL line per criterion.
 */

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptsep/bounds.hh"
#include "ptsep/chain.hh"
#include "ptsep/cli.hh"
#include "ptsep/closures.hh"
#include "ptsep/error.hh"
#include "ptsep/families.hh"
#include "ptsep/io.hh"
#include "ptsep/oracle.hh"
#include "ptsep/separator.hh"
#include "support/random_nfa.hh"

using namespace ptsep;
using namespace ptsep::testing;

namespace {

// Pinned tolerances.
constexpr double quadratic_seconds = 10.0;
constexpr double cubic_seconds = 60.0;
constexpr double exponential_seconds = 60.0;
constexpr std::size_t length_tolerance = 0;
constexpr std::size_t random_pairs = 200;
constexpr std::size_t random_runs = 500;
constexpr std::size_t oracle_bound = 8;
constexpr unsigned seed = 20240607;

struct Result {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

struct CliOutcome {
    int code;
    std::string out;
    std::string err;
};

CliOutcome cli_run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> family_args(const std::string& command, const FamilySpec& spec) {
    return {command, "--family", to_string(spec.kind), "--param", std::to_string(spec.parameter)};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string label(const FamilySpec& spec) { return to_string(spec.kind) + " " + std::to_string(spec.parameter); }

/// Tower written by `witness --family-witness`, validated against the family.
std::optional<Tower> cli_witness(const FamilySpec& spec, Result& result) {
    auto args = family_args("witness", spec);
    args.push_back("--family-witness");
    CliOutcome r = cli_run(args);
    if (r.code != cli::success) {
        result.require(false, label(spec) + ": witness exited " + std::to_string(r.code) + " " + r.err);
        return std::nullopt;
    }
    auto [first, second] = build_family(spec);
    Tower tower = io::tower_from_json(io::Json::parse(r.out), unite(first.alphabet(), second.alphabet()));
    try {
        validate_tower(tower, first, second);
    } catch (const std::exception& e) {
        result.require(false, label(spec) + ": invalid witness tower: " + e.what());
        return std::nullopt;
    }
    return tower;
}

std::optional<std::size_t> cli_towerlen(const FamilySpec& spec, Result& result) {
    CliOutcome r = cli_run(family_args("towerlen", spec));
    if (r.code != cli::success || r.out == "infinite\n") {
        result.require(false, label(spec) + ": towerlen gave '" + r.out + "' exit " + std::to_string(r.code));
        return std::nullopt;
    }
    return std::stoul(r.out);
}

bool cli_separable(const FamilySpec& spec, Result& result) {
    CliOutcome r = cli_run(family_args("decide", spec));
    bool ok = r.code == cli::success && r.out == "separable\n";
    result.require(ok, label(spec) + ": decide gave '" + r.out + "'");
    return ok;
}

std::string fmt(double seconds) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << seconds << "s";
    return s.str();
}

// ---- criterion 1 ----

Result quadratic_family() {
    Result result;
    for (unsigned n : {5u, 7u, 9u}) {
        FamilySpec spec{FamilyKind::quadratic, n};
        auto start = std::chrono::steady_clock::now();
        cli_separable(spec, result);
        auto tower = cli_witness(spec, result);
        auto length = cli_towerlen(spec, result);
        double elapsed = seconds_since(start);
        const std::size_t lower = n * n - 4 * n + 5;
        const Natural upper = upper_bound(n, 2);
        if (tower) { result.require(tower->length() + length_tolerance >= lower, label(spec) + ": witness too short"); }
        if (length) {
            result.require(*length + length_tolerance >= lower, label(spec) + ": towerlen below the lower bound");
            result.require(Natural(*length) <= upper, label(spec) + ": towerlen above upper_bound(n, 2)");
            auto [first, second] = build_family(spec);
            Tower longest = extract_tower(first, second);
            validate_tower(longest, first, second);
            result.require(longest.length() == *length, label(spec) + ": extracted tower differs from towerlen");
            if (tower) { result.require(tower->length() <= *length, label(spec) + ": witness exceeds towerlen"); }
        }
        result.require(elapsed < quadratic_seconds, label(spec) + ": took " + fmt(elapsed));
        result.note("n=" + std::to_string(n) + " witness " + (tower ? std::to_string(tower->length()) : "-") +
                    " towerlen " + (length ? std::to_string(*length) : "-") + " in [" + std::to_string(lower) + ", " +
                    io::to_string(upper) + "] " + fmt(elapsed));
    }
    return result;
}

// ---- criterion 2 ----

Result cubic_family() {
    Result result;
    FamilySpec spec{FamilyKind::cubic, 8};
    auto start = std::chrono::steady_clock::now();
    cli_separable(spec, result);
    auto tower = cli_witness(spec, result);
    auto length = cli_towerlen(spec, result);
    double elapsed = seconds_since(start);
    const Natural upper = upper_bound(8, 4);
    if (tower) {
        result.require(tower->length() >= 109, "witness shorter than 109");
        result.require(Natural(tower->length()) <= upper, "witness above upper_bound(8, 4)");
    }
    if (length) {
        result.require(*length >= 109, "towerlen below 109");
        result.require(Natural(*length) <= upper, "towerlen above upper_bound(8, 4)");
    }
    result.require(elapsed < cubic_seconds, "took " + fmt(elapsed));
    result.note("witness " + (tower ? std::to_string(tower->length()) : "-") + " towerlen " +
                (length ? std::to_string(*length) : "-") + " <= " + io::to_string(upper) + " " + fmt(elapsed));
    return result;
}

// ---- criterion 3 ----

Result exponential_family() {
    Result result;
    for (unsigned m = 0; m <= 3; ++m) {
        FamilySpec spec{FamilyKind::exponential, m};
        auto start = std::chrono::steady_clock::now();
        cli_separable(spec, result);
        auto tower = cli_witness(spec, result);
        auto length = cli_towerlen(spec, result);
        double elapsed = seconds_since(start);
        const std::size_t expected = std::size_t{4} << m;
        if (tower) { result.require(tower->length() == expected, label(spec) + ": witness length differs"); }
        if (m == 0 && length) {
            auto [am, bm] = build_family(spec);
            std::size_t oracle =
                oracle_max_tower(enumerate_language(am, oracle_bound), enumerate_language(bm, oracle_bound)).length;
            result.require(*length == 4, "m=0: towerlen is not 4");
            result.require(oracle == *length, "m=0: oracle gives " + std::to_string(oracle));
        }
        if (m == 3) { result.require(elapsed < exponential_seconds, "m=3 took " + fmt(elapsed)); }
        result.note("m=" + std::to_string(m) + " witness " + (tower ? std::to_string(tower->length()) : "-") +
                    " towerlen " + (length ? std::to_string(*length) : "-") + " " + fmt(elapsed));
    }
    return result;
}

// ---- random instances shared by criteria 4, 7 and 8 ----

struct RandomPair {
    Nfa first;
    Nfa second;
};

std::vector<RandomPair> separable_random_pairs() {
    std::mt19937 rng(seed);
    std::vector<RandomPair> pairs;
    while (pairs.size() < random_pairs) {
        std::size_t k = 1 + rng() % 2;
        Nfa first = random_trimmed_nfa(rng, 4, k);
        Nfa second = random_trimmed_nfa(rng, 4, k);
        if (run_chain(first, second).separable()) { pairs.push_back({std::move(first), std::move(second)}); }
    }
    return pairs;
}

// ---- criterion 4 ----

Result upper_bound_conformance(const std::vector<RandomPair>& pairs) {
    Result result;
    std::size_t violations = 0;
    std::size_t longest = 0;
    for (const RandomPair& p : pairs) {
        const std::size_t n = std::max(trim(p.first).num_states(), trim(p.second).num_states());
        const std::size_t m = unite(p.first.alphabet(), p.second.alphabet()).size();
        TowerLength length = max_tower_length(p.first, p.second);
        if (length.is_infinite() || Natural(length.value()) > upper_bound(n, m)) { ++violations; }
        if (!length.is_infinite()) { longest = std::max(longest, length.value()); }
    }
    result.require(violations == 0, std::to_string(violations) + " violations");
    result.note(std::to_string(pairs.size()) + " separable pairs, longest tower " + std::to_string(longest));
    return result;
}

// ---- criterion 5 ----

Result factorization_properties() {
    Result result;
    std::mt19937 rng(seed + 5);
    std::size_t violations = 0;
    auto check = [&](bool ok) {
        if (!ok) { ++violations; }
    };
    for (std::size_t round = 0; round < random_runs; ++round) {
        Nfa nfa = random_trimmed_nfa(rng, 6, 1 + round % 3);
        Path path = random_accepting_path(rng, nfa, 30);
        CyclicFactorization fac = cyclic_factorize(nfa, path);
        const std::size_t n = nfa.num_states();
        const Word word = nfa.alphabet().decode(path.symbols);
        const auto word_letters = letters_of(word);
        Word joined;
        std::set<State> anchors;
        for (const Factor& f : fac.factors) {
            joined.insert(joined.end(), f.word.begin(), f.word.end());
            if (f.kind == FactorKind::cycle) {
                check(anchors.insert(f.anchor_state).second);
                auto own = letters_of(f.word);
                if (fac.factors.size() > 1) {
                    check(own.size() < word_letters.size() &&
                          std::includes(word_letters.begin(), word_letters.end(), own.begin(), own.end()));
                }
            } else {
                check(f.word.size() == 1);
            }
        }
        check(joined == word);
        check(fac.count(FactorKind::cycle) <= n);
        check(fac.count(FactorKind::letter) + 1 <= std::max<std::size_t>(n, 1));
    }
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (std::uint64_t x = 0; x <= 6; ++x) {
            check(cycle_weight(n, x + 1) == n * cycle_weight(n, x) + n);
            check(upper_bound(n, x) == cycle_weight(n, x) + 1);
        }
    }
    result.require(violations == 0, std::to_string(violations) + " violations");
    result.note(std::to_string(random_runs) + " runs, 70 grid points");
    return result;
}

// ---- criterion 6 ----

const std::vector<FamilySpec> family_specs = {
    {FamilyKind::quadratic, 5},   {FamilyKind::quadratic, 7},   {FamilyKind::quadratic, 9},
    {FamilyKind::cubic, 8},       {FamilyKind::exponential, 0}, {FamilyKind::exponential, 1},
    {FamilyKind::exponential, 2}, {FamilyKind::exponential, 3},
};

Result weight_audit() {
    Result result;
    for (const FamilySpec& spec : family_specs) {
        auto [first, second] = build_family(spec);
        TowerAudit audit = audit_tower_weights(witness_tower(spec), first, second);
        std::vector<std::size_t> drops;
        for (std::size_t i = 1; i < audit.levels.size(); ++i) {
            if (audit.levels[i - 1].weight.total >= audit.levels[i].weight.total) { drops.push_back(i); }
        }
        bool ok = !audit.violation && drops.empty();
        std::string where;
        if (!drops.empty()) {
            std::size_t i = drops.front();
            where = ", first at level " + std::to_string(i) + ": W" + std::to_string(i - 1) + "=" +
                    io::to_string(audit.levels[i - 1].weight.total) + " >= W" + std::to_string(i) + "=" +
                    io::to_string(audit.levels[i].weight.total);
        }
        result.require(ok, label(spec) + ": " + std::to_string(drops.size()) + " non-increasing steps" + where);
    }
    return result;
}

// ---- criterion 7 ----

void check_separator(const Nfa& first, const Nfa& second, const std::string& name, Result& result) {
    SeparatorResult sep = synthesize(first, second);
    result.require(verify_separator(sep.separator, first, second), name + ": separator fails verification");
    const auto& levels = sep.chain.levels;
    for (std::size_t k = 1; k < levels.size() && k <= sep.levels.size(); ++k) {
        Nfa removed = difference(levels[k - 1].second, levels[k].second);
        result.require(is_subset(removed, sep.levels[k - 1]), name + ": level " + std::to_string(k) + " misses R_k-1 \\ R_k");
    }
}

Result separator_correctness(const std::vector<RandomPair>& pairs) {
    Result result;
    auto start = std::chrono::steady_clock::now();
    for (const FamilySpec& spec : family_specs) {
        auto [first, second] = build_family(spec);
        check_separator(first, second, label(spec), result);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        check_separator(pairs[i].first, pairs[i].second, "random pair " + std::to_string(i), result);
    }
    bool rejected = false;
    try {
        synthesize(even_as(), odd_as());
    } catch (const NotSeparable&) {
        rejected = true;
    }
    result.require(rejected, "(aa)* vs a(aa)* was not reported NotSeparable");
    result.note(std::to_string(family_specs.size() + pairs.size()) + " instances " + fmt(seconds_since(start)));
    return result;
}

// ---- criterion 8 ----

/// w is a subsequence of some word of L: search over (state, matched prefix of w).
bool brute_in_down(const Nfa& nfa, const Word& w) {
    std::vector<SymbolId> s = nfa.alphabet().encode(w);
    const auto edges = nfa.transitions();
    std::set<std::pair<State, std::size_t>> seen;
    std::vector<std::pair<State, std::size_t>> stack;
    for (State q : nfa.initial_states()) { stack.emplace_back(q, 0); }
    while (!stack.empty()) {
        auto [q, i] = stack.back();
        stack.pop_back();
        if (!seen.insert({q, i}).second) { continue; }
        if (i == s.size() && nfa.is_accepting(q)) { return true; }
        for (const Transition& t : edges) {
            if (t.from != q) { continue; }
            stack.emplace_back(t.to, i);
            if (i < s.size() && t.symbol == s[i]) { stack.emplace_back(t.to, i + 1); }
        }
    }
    return false;
}

/// Some word of L is a subsequence of w: search over (state, consumed prefix of w).
bool brute_in_up(const Nfa& nfa, const Word& w) {
    std::vector<SymbolId> s = nfa.alphabet().encode(w);
    const auto edges = nfa.transitions();
    std::set<std::pair<State, std::size_t>> seen;
    std::vector<std::pair<State, std::size_t>> stack;
    for (State q : nfa.initial_states()) { stack.emplace_back(q, 0); }
    while (!stack.empty()) {
        auto [q, i] = stack.back();
        stack.pop_back();
        if (!seen.insert({q, i}).second) { continue; }
        if (i == s.size()) {
            if (nfa.is_accepting(q)) { return true; }
            continue;
        }
        stack.emplace_back(q, i + 1);
        for (const Transition& t : edges) {
            if (t.from == q && t.symbol == s[i]) { stack.emplace_back(t.to, i + 1); }
        }
    }
    return false;
}

/// Longest alternating chain over the two finite sets, by dynamic programming in order of length.
std::size_t brute_chain_length(const std::set<Word>& first, const std::set<Word>& second) {
    std::vector<std::pair<Word, int>> items;
    for (const Word& w : first) { items.emplace_back(w, 0); }
    for (const Word& w : second) { items.emplace_back(w, 1); }
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    std::vector<std::size_t> best(items.size(), 1);
    std::size_t longest = 0;
    for (std::size_t j = 0; j < items.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (items[i].second == items[j].second || items[i].first.size() >= items[j].first.size()) { continue; }
            if (brute_embeds(items[i].first, items[j].first)) { best[j] = std::max(best[j], best[i] + 1); }
        }
        longest = std::max(longest, best[j]);
    }
    return longest;
}

Result oracle_agreement(const std::vector<RandomPair>& pairs) {
    Result result;
    std::size_t membership_errors = 0;
    std::size_t tower_errors = 0;
    std::size_t above_exact = 0;
    std::size_t equal_exact = 0;
    for (const RandomPair& p : pairs) {
        for (const Nfa* nfa : {&p.first, &p.second}) {
            Nfa down = downward_closure(*nfa);
            Nfa up = upward_closure(*nfa);
            for (const Word& w : brute_words(nfa->alphabet(), oracle_bound)) {
                if (accepts(down, w) != brute_in_down(*nfa, w)) { ++membership_errors; }
                if (accepts(up, w) != brute_in_up(*nfa, w)) { ++membership_errors; }
            }
        }
        std::size_t oracle =
            oracle_max_tower(enumerate_language(p.first, oracle_bound), enumerate_language(p.second, oracle_bound))
                .length;
        std::size_t brute =
            brute_chain_length(brute_language(p.first, oracle_bound), brute_language(p.second, oracle_bound));
        if (oracle != brute) { ++tower_errors; }
        std::size_t exact = max_tower_length(p.first, p.second).value();
        if (oracle > exact) { ++above_exact; }
        if (oracle == exact) { ++equal_exact; }
    }
    for (unsigned m : {0u, 1u}) {
        auto [am, bm] = build_family({FamilyKind::exponential, m});
        std::size_t oracle =
            oracle_max_tower(enumerate_language(am, oracle_bound), enumerate_language(bm, oracle_bound)).length;
        std::size_t exact = max_tower_length(am, bm).value();
        result.require(oracle == exact, "exponential " + std::to_string(m) + ": oracle " + std::to_string(oracle) +
                                            " vs exact " + std::to_string(exact));
    }
    result.require(membership_errors == 0, std::to_string(membership_errors) + " closure membership mismatches");
    result.require(tower_errors == 0, std::to_string(tower_errors) + " oracle/brute-force tower mismatches");
    result.require(above_exact == 0, std::to_string(above_exact) + " oracle values above the exact length");
    result.note(std::to_string(equal_exact) + "/" + std::to_string(pairs.size()) + " random pairs reach the exact length");
    return result;
}

} // namespace

int main() {
    std::vector<RandomPair> pairs = separable_random_pairs();
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"quadratic family", quadratic_family},
        {"cubic family", cubic_family},
        {"exponential family", exponential_family},
        {"upper bound on random pairs", [&] { return upper_bound_conformance(pairs); }},
        {"factorization properties", factorization_properties},
        {"weight audit of family witness towers", weight_audit},
        {"separator correctness", [&] { return separator_correctness(pairs); }},
        {"oracle agreement", [&] { return oracle_agreement(pairs); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.require(false, std::string("exception: ") + e.what());
        }
        if (!result.pass) { ++failed; }
        std::cout << (result.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
        for (const std::string& note : result.notes) { std::cout << "; " << note; }
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
