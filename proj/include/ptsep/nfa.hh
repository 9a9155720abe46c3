/* nfa.hh -- epsilon-free nondeterministic finite automata and their decision procedures.
 */

#ifndef PTSEP_NFA_HH_
#define PTSEP_NFA_HH_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptsep/alphabet.hh"

namespace ptsep {

using State = std::uint32_t;

struct Transition {
    State from;
    SymbolId symbol;
    State to;
    auto operator<=>(const Transition&) const = default;
};

/// Budget for constructions that may blow up exponentially.
struct Limits {
    std::size_t state_budget = 1'000'000;
};

/**
 * Nondeterministic finite automaton without epsilon transitions.
 *
 * States are dense indices 0..num_states()-1, each carrying a unique display name. Successor
 * lists are kept sorted and duplicate-free. Once built an Nfa is used as an immutable value;
 * every operation below returns a new automaton.
 */
class Nfa {
public:
    Nfa() = default;
    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Adds a state; an empty name defaults to the decimal index. Throws ParseError on a duplicate name.
    State add_state(std::string name = {});
    void add_transition(State from, SymbolId symbol, State to);
    void add_transition(State from, std::string_view symbol, State to);
    void set_initial(State q, bool value = true);
    void set_accepting(State q, bool value = true);

    std::size_t num_states() const noexcept { return names_.size(); }
    std::size_t num_transitions() const noexcept;
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& state_name(State q) const { return names_.at(q); }
    std::optional<State> find_state(std::string_view name) const;

    std::span<const State> successors(State q, SymbolId a) const { return delta_[q][a]; }
    bool is_initial(State q) const { return initial_[q] != 0; }
    bool is_accepting(State q) const { return accepting_[q] != 0; }
    std::vector<State> initial_states() const;
    std::vector<State> accepting_states() const;
    /// All transitions sorted by (from, symbol, to).
    std::vector<Transition> transitions() const;

    /// Structural equality (same alphabet, names, transitions, initial and accepting states).
    bool operator==(const Nfa&) const = default;

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::map<std::string, State, std::less<>> index_;
    std::vector<std::vector<std::vector<State>>> delta_;
    std::vector<char> initial_;
    std::vector<char> accepting_;
};

/// A run q0, a1, q1, ..., an, qn; `states` has one more element than `symbols`.
struct Path {
    std::vector<State> states;
    std::vector<SymbolId> symbols;

    std::size_t length() const noexcept { return symbols.size(); }
    bool operator==(const Path&) const = default;
};

/// Automaton over `alphabet` with no states.
Nfa empty_language(const Alphabet& alphabet);
/// One-state automaton accepting every word over `alphabet`.
Nfa universal_language(const Alphabet& alphabet);
/// Automaton accepting exactly `word`; throws UnknownSymbol.
Nfa single_word(const Word& word, const Alphabet& alphabet);

/// Same automaton over a larger alphabet (new symbols get no transitions).
Nfa with_alphabet(const Nfa& nfa, const Alphabet& alphabet);

bool accepts(const Nfa& nfa, const Word& word);
bool accepts(const Nfa& nfa, std::span<const SymbolId> word);

/// Keeps the useful states only, renumbered breadth-first from the initial states. Names are kept.
Nfa trim(const Nfa& nfa);
/// Renumbers states breadth-first from the initial states without removing any; unreachable
/// states follow in their original order. Names are kept.
Nfa canonicalize(const Nfa& nfa);

bool is_empty(const Nfa& nfa);

/// Product automaton over the union of both alphabets, trimmed.
Nfa intersect(const Nfa& a, const Nfa& b);
/// Disjoint union over the union of both alphabets, trimmed.
Nfa unite(const Nfa& a, const Nfa& b);

/// Subset construction (trimmed, states named by index). Throws ResourceLimit.
Nfa determinize(const Nfa& nfa, const Limits& limits = {});
/// Minimal trimmed DFA for the language of `nfa`. Throws ResourceLimit.
Nfa minimize(const Nfa& nfa, const Limits& limits = {});
/// Complement with respect to the automaton's own alphabet. Throws ResourceLimit.
Nfa complement(const Nfa& nfa, const Limits& limits = {});
/// L(a) \ L(b) over the union of both alphabets. Throws ResourceLimit.
Nfa difference(const Nfa& a, const Nfa& b, const Limits& limits = {});

/// L(a) is a subset of L(b). Throws ResourceLimit.
bool is_subset(const Nfa& a, const Nfa& b, const Limits& limits = {});
bool equivalent(const Nfa& a, const Nfa& b, const Limits& limits = {});

/// Length-lexicographically smallest accepted word, if any.
std::optional<Word> shortest_word(const Nfa& nfa, const Limits& limits = {});

/// Throws InvalidPath unless every step of `path` is a transition of `nfa`.
void validate_path(const Nfa& nfa, const Path& path);

/**
 * Deterministic accepting run on `word`: breadth-first over (state, position) pairs, with
 * initial states and successors taken in index order and the first parent found kept; the first accepting state reached at
 * the end of the word is chosen.
 */
std::optional<Path> find_accepting_path(const Nfa& nfa, const Word& word);

} // namespace ptsep

#endif // PTSEP_NFA_HH_
