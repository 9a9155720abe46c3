#include "ptsep/bounds.hh"

#include <algorithm>

#include "ptsep/closures.hh"
#include "ptsep/error.hh"

namespace ptsep {

Natural upper_bound(std::uint64_t n, std::uint64_t m) { return cycle_weight(n, m) + 1; }

Natural cycle_weight(std::uint64_t n, std::uint64_t x) {
    if (n == 0) { throw InvalidParameter("number of states must be positive"); }
    Natural sum = 0;
    Natural power = 1;
    for (std::uint64_t i = 1; i <= x; ++i) {
        power *= n;
        sum += power;
    }
    return sum;
}

std::size_t CyclicFactorization::count(FactorKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [&](const Factor& f) { return f.kind == kind; }));
}

namespace {

using Mask = std::uint64_t;

Mask bit(SymbolId a) { return Mask{1} << a; }

void check_alphabet(const Nfa& nfa) {
    if (nfa.alphabet().size() > 64) { throw InvalidParameter("factorization supports at most 64 symbols"); }
}

/// Length of the greedy factor starting at step `begin` and its anchor, if it is a cycle factor.
std::pair<std::size_t, std::optional<State>> greedy_factor(const Path& path, std::size_t begin, std::size_t end,
                                                           std::size_t num_states) {
    std::vector<long long> first_seen(num_states, -1);
    std::vector<long long> last_letter(64, -1);
    Mask prefix_letters = 0;
    std::optional<State> covering;  // anchor of a cycle over exactly prefix_letters
    std::size_t best = 0;
    std::optional<State> best_anchor;
    first_seen[path.states[begin]] = static_cast<long long>(begin);
    for (std::size_t j = begin + 1; j <= end; ++j) {
        SymbolId a = path.symbols[j - 1];
        last_letter[a] = static_cast<long long>(j);
        if ((prefix_letters & bit(a)) == 0) {
            prefix_letters |= bit(a);
            // cycles closed earlier use fewer letters than the prefix now has
            covering.reset();
        }
        State q = path.states[j];
        if (first_seen[q] >= 0) {
            // The loop from the first visit of q has the largest alphabet among loops ending here.
            Mask loop = 0;
            for (SymbolId x = 0; x < 64; ++x) {
                if (last_letter[x] > first_seen[q]) { loop |= bit(x); }
            }
            if (loop == prefix_letters && !covering) { covering = q; }
        } else {
            first_seen[q] = static_cast<long long>(j);
        }
        if (covering) {
            best = j - begin;
            best_anchor = covering;
        }
    }
    if (best == 0) { return {1, std::nullopt}; }
    return {best, best_anchor};
}

} // namespace

bool contains_full_cycle(const Path& path, std::size_t begin, std::size_t end) {
    Mask all = 0;
    for (std::size_t i = begin; i < end; ++i) { all |= bit(path.symbols[i]); }
    for (std::size_t s = begin; s <= end; ++s) {
        Mask loop = 0;
        for (std::size_t t = s + 1; t <= end; ++t) {
            loop |= bit(path.symbols[t - 1]);
            if (path.states[t] == path.states[s] && loop == all) { return true; }
        }
    }
    return false;
}

CyclicFactorization cyclic_factorize(const Nfa& nfa, const Path& path, std::size_t begin, std::size_t end,
                                     std::size_t n) {
    check_alphabet(nfa);
    validate_path(nfa, path);
    if (begin > end || end > path.length()) { throw InvalidPath("segment out of range"); }
    CyclicFactorization result;
    result.automaton_states = n;
    result.boundary_states.push_back(path.states[begin]);
    for (std::size_t i = begin; i < end; ++i) { result.subject.push_back(nfa.alphabet()[path.symbols[i]]); }
    std::size_t i = begin;
    while (i < end) {
        auto [length, anchor] = greedy_factor(path, i, end, nfa.num_states());
        Factor factor;
        factor.offset = i - begin;
        for (std::size_t k = i; k < i + length; ++k) { factor.word.push_back(nfa.alphabet()[path.symbols[k]]); }
        factor.from_state = path.states[i];
        factor.to_state = path.states[i + length];
        factor.kind = anchor ? FactorKind::cycle : FactorKind::letter;
        factor.anchor_state = anchor ? *anchor : factor.from_state;
        result.factors.push_back(std::move(factor));
        result.boundary_states.push_back(path.states[i + length]);
        i += length;
    }
    return result;
}

CyclicFactorization cyclic_factorize(const Nfa& nfa, const Path& path) {
    return cyclic_factorize(nfa, path, 0, path.length(), nfa.num_states());
}

WeightReport factorization_weight(const CyclicFactorization& factorization) {
    WeightReport report;
    report.total = 0;
    for (const Factor& f : factorization.factors) {
        Natural w = f.kind == FactorKind::letter
                        ? Natural(1)
                        : cycle_weight(factorization.automaton_states, letters_of(f.word).size());
        report.total += w;
        report.per_factor.push_back(std::move(w));
    }
    return report;
}

TowerAudit audit_tower_weights(const Tower& tower, const Nfa& first_in, const Nfa& second_in) {
    if (tower.words.empty() || tower.words.size() != tower.sides.size()) {
        throw InvalidTower("tower must be non-empty with one side per word");
    }
    Alphabet sigma = unite(first_in.alphabet(), second_in.alphabet());
    Nfa first = trim(with_alphabet(first_in, sigma));
    Nfa second = trim(with_alphabet(second_in, sigma));
    TowerAudit audit;
    audit.states = std::max<std::size_t>({first.num_states(), second.num_states(), 1});
    audit.alphabet_size = sigma.size();
    audit.top_bound = cycle_weight(audit.states, audit.alphabet_size);

    const std::size_t r = tower.words.size();
    std::vector<Path> paths;
    for (std::size_t i = 0; i < r; ++i) {
        const Nfa& side = tower.sides[i] == Side::first ? first : second;
        std::optional<Path> path;
        try {
            path = find_accepting_path(side, tower.words[i]);
        } catch (const UnknownSymbol&) {
        }
        if (!path) {
            throw PathNotFound("tower word " + std::to_string(i) + " '" + format_word(tower.words[i]) +
                               "' is not accepted by the " + to_string(tower.sides[i]) + " automaton");
        }
        paths.push_back(std::move(*path));
    }
    validate_tower(tower, first, second);

    audit.levels.resize(r);
    audit.first = first;
    audit.second = second;
    auto automaton = [&](std::size_t i) -> const Nfa& { return tower.sides[i] == Side::first ? first : second; };
    for (std::size_t i = r; i-- > 0;) {
        AuditLevel& level = audit.levels[i];
        level.word = tower.words[i];
        level.side = tower.sides[i];
        const Nfa& nfa = automaton(i);
        if (i + 1 == r) {
            level.factorization = cyclic_factorize(nfa, paths[i], 0, paths[i].length(), audit.states);
        } else {
            const CyclicFactorization& upper = audit.levels[i + 1].factorization;
            auto embedding = is_subsequence(tower.words[i], tower.words[i + 1]);
            // cut[j]: number of lower letters mapped before the j-th upper factor starts
            std::vector<std::size_t> cut;
            std::size_t p = 0;
            for (const Factor& f : upper.factors) {
                while (p < embedding->positions.size() && embedding->positions[p] < f.offset) { ++p; }
                cut.push_back(p);
            }
            cut.push_back(tower.words[i].size());
            CyclicFactorization merged;
            merged.automaton_states = audit.states;
            merged.subject = tower.words[i];
            merged.boundary_states.push_back(paths[i].states.front());
            for (std::size_t j = 0; j + 1 < cut.size(); ++j) {
                CyclicFactorization piece = cyclic_factorize(nfa, paths[i], cut[j], cut[j + 1], audit.states);
                for (Factor& f : piece.factors) {
                    f.offset += cut[j];
                    merged.factors.push_back(std::move(f));
                }
                merged.boundary_states.insert(merged.boundary_states.end(), piece.boundary_states.begin() + 1,
                                              piece.boundary_states.end());
            }
            level.factorization = std::move(merged);
        }
        level.weight = factorization_weight(level.factorization);
        if (i + 1 < r && level.weight.total >= audit.levels[i + 1].weight.total) { audit.violation = true; }
    }
    audit.exceeds_top_bound = audit.levels.back().weight.total > audit.top_bound;
    return audit;
}

} // namespace ptsep
