#include "ptsep/closures.hh"

#include "ptsep/error.hh"
#include "state_set.hh"

namespace ptsep {

std::optional<EmbeddingWitness> is_subsequence(const Word& v, const Word& w) {
    EmbeddingWitness witness;
    witness.positions.reserve(v.size());
    std::size_t j = 0;
    for (const Symbol& letter : v) {
        while (j < w.size() && w[j] != letter) { ++j; }
        if (j == w.size()) { return std::nullopt; }
        witness.positions.push_back(j++);
    }
    return witness;
}

bool embeds(const Word& v, const Word& w) {
    std::size_t j = 0;
    for (const Symbol& letter : v) {
        while (j < w.size() && w[j] != letter) { ++j; }
        if (j == w.size()) { return false; }
        ++j;
    }
    return true;
}

Nfa downward_closure(const Nfa& nfa_in) {
    Nfa nfa = trim(nfa_in);
    const std::size_t n = nfa.num_states();
    // skip[q]: states reachable from q by zero or more arbitrary transitions.
    std::vector<detail::StateSet> skip;
    skip.reserve(n);
    for (State q = 0; q < n; ++q) {
        detail::StateSet seen(n);
        std::vector<State> stack{q};
        seen.insert(q);
        while (!stack.empty()) {
            State p = stack.back();
            stack.pop_back();
            for (SymbolId a = 0; a < nfa.alphabet().size(); ++a) {
                for (State r : nfa.successors(p, a)) {
                    if (!seen.contains(r)) { seen.insert(r); stack.push_back(r); }
                }
            }
        }
        skip.push_back(std::move(seen));
    }
    Nfa out(nfa.alphabet());
    for (State q = 0; q < n; ++q) {
        out.add_state();
        out.set_accepting(q, nfa.is_accepting(q));
    }
    for (State q : nfa.initial_states()) {
        skip[q].for_each([&](State r) { out.set_initial(r); });
    }
    for (const Transition& t : nfa.transitions()) {
        skip[t.to].for_each([&](State r) { out.add_transition(t.from, t.symbol, r); });
    }
    return trim(out);
}

Nfa upward_closure(const Nfa& nfa_in) {
    Nfa nfa = trim(nfa_in);
    Nfa out(nfa.alphabet());
    for (State q = 0; q < nfa.num_states(); ++q) {
        out.add_state();
        out.set_initial(q, nfa.is_initial(q));
        out.set_accepting(q, nfa.is_accepting(q));
        for (SymbolId a = 0; a < nfa.alphabet().size(); ++a) { out.add_transition(q, a, q); }
    }
    for (const Transition& t : nfa.transitions()) { out.add_transition(t.from, t.symbol, t.to); }
    return trim(out);
}

bool embeds_into_language(const Word& w, const Nfa& nfa) {
    nfa.alphabet().encode(w);
    return accepts(downward_closure(nfa), w);
}

} // namespace ptsep
