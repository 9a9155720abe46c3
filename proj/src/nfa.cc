#include "ptsep/nfa.hh"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "ptsep/error.hh"
#include "state_set.hh"

namespace ptsep {

using detail::StateSet;
using detail::StateSetHash;

State Nfa::add_state(std::string name) {
    auto q = static_cast<State>(names_.size());
    if (name.empty()) { name = std::to_string(q); }
    if (!index_.emplace(name, q).second) { throw ParseError("duplicate state '" + name + "'"); }
    names_.push_back(std::move(name));
    delta_.emplace_back(alphabet_.size());
    initial_.push_back(0);
    accepting_.push_back(0);
    return q;
}

void Nfa::add_transition(State from, SymbolId symbol, State to) {
    if (from >= num_states() || to >= num_states()) { throw ParseError("transition references an unknown state"); }
    if (symbol >= alphabet_.size()) { throw ParseError("transition references an unknown symbol"); }
    auto& targets = delta_[from][symbol];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to) { targets.insert(it, to); }
}

void Nfa::add_transition(State from, std::string_view symbol, State to) {
    add_transition(from, alphabet_.id(symbol), to);
}

void Nfa::set_initial(State q, bool value) { initial_.at(q) = value ? 1 : 0; }
void Nfa::set_accepting(State q, bool value) { accepting_.at(q) = value ? 1 : 0; }

std::size_t Nfa::num_transitions() const noexcept {
    std::size_t count = 0;
    for (const auto& row : delta_) {
        for (const auto& targets : row) { count += targets.size(); }
    }
    return count;
}

std::optional<State> Nfa::find_state(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) { return std::nullopt; }
    return it->second;
}

std::vector<State> Nfa::initial_states() const {
    std::vector<State> out;
    for (State q = 0; q < num_states(); ++q) { if (initial_[q]) { out.push_back(q); } }
    return out;
}

std::vector<State> Nfa::accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < num_states(); ++q) { if (accepting_[q]) { out.push_back(q); } }
    return out;
}

std::vector<Transition> Nfa::transitions() const {
    std::vector<Transition> out;
    for (State q = 0; q < num_states(); ++q) {
        for (SymbolId a = 0; a < alphabet_.size(); ++a) {
            for (State r : delta_[q][a]) { out.push_back({q, a, r}); }
        }
    }
    return out;
}

namespace {

void check_budget(std::size_t count, const Limits& limits) {
    if (count > limits.state_budget) {
        throw ResourceLimit("state budget of " + std::to_string(limits.state_budget) + " exceeded");
    }
}

/// Copy of `nfa` restricted to `order`, where order[i] becomes state i.
Nfa renumber(const Nfa& nfa, const std::vector<State>& order, bool keep_names) {
    std::vector<State> map(nfa.num_states(), State(-1));
    Nfa out(nfa.alphabet());
    for (State q : order) {
        map[q] = out.add_state(keep_names ? nfa.state_name(q) : std::string{});
        out.set_initial(map[q], nfa.is_initial(q));
        out.set_accepting(map[q], nfa.is_accepting(q));
    }
    for (State q : order) {
        for (SymbolId a = 0; a < nfa.alphabet().size(); ++a) {
            for (State r : nfa.successors(q, a)) {
                if (map[r] != State(-1)) { out.add_transition(map[q], a, map[r]); }
            }
        }
    }
    return out;
}

/// Breadth-first order over the states allowed by `keep`, starting from the initial states.
std::vector<State> bfs_order(const Nfa& nfa, const std::vector<char>& keep) {
    std::vector<char> seen(nfa.num_states(), 0);
    std::vector<State> order;
    for (State q : nfa.initial_states()) {
        if (keep[q] && !seen[q]) { seen[q] = 1; order.push_back(q); }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        State q = order[head];
        for (SymbolId a = 0; a < nfa.alphabet().size(); ++a) {
            for (State r : nfa.successors(q, a)) {
                if (keep[r] && !seen[r]) { seen[r] = 1; order.push_back(r); }
            }
        }
    }
    return order;
}

std::vector<char> forward_reachable(const Nfa& nfa) {
    std::vector<char> all(nfa.num_states(), 1);
    std::vector<char> reach(nfa.num_states(), 0);
    for (State q : bfs_order(nfa, all)) { reach[q] = 1; }
    return reach;
}

std::vector<char> backward_reachable(const Nfa& nfa) {
    std::vector<std::vector<State>> preds(nfa.num_states());
    for (const Transition& t : nfa.transitions()) { preds[t.to].push_back(t.from); }
    std::vector<char> reach(nfa.num_states(), 0);
    std::vector<State> stack;
    for (State q : nfa.accepting_states()) { reach[q] = 1; stack.push_back(q); }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : preds[q]) {
            if (!reach[p]) { reach[p] = 1; stack.push_back(p); }
        }
    }
    return reach;
}

Nfa trim_impl(const Nfa& nfa, bool keep_names) {
    auto fwd = forward_reachable(nfa);
    auto bwd = backward_reachable(nfa);
    std::vector<char> keep(nfa.num_states());
    for (State q = 0; q < nfa.num_states(); ++q) { keep[q] = fwd[q] && bwd[q]; }
    return renumber(nfa, bfs_order(nfa, keep), keep_names);
}

/**
 * Forward simulation: result[p] holds every q with p <= q, i.e. q is accepting whenever p is and
 * every step of p can be matched by q. Simulation implies language inclusion.
 */
std::vector<StateSet> simulation(const Nfa& nfa) {
    const std::size_t n = nfa.num_states();
    const std::size_t sigma = nfa.alphabet().size();
    std::vector<StateSet> sim(n, StateSet(n));
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            if (!nfa.is_accepting(p) || nfa.is_accepting(q)) { sim[p].insert(q); }
        }
    }
    // pred[a][r]: states with an a-step into r
    std::vector<std::vector<StateSet>> pred(sigma, std::vector<StateSet>(n, StateSet(n)));
    for (State q = 0; q < n; ++q) {
        for (SymbolId a = 0; a < sigma; ++a) {
            for (State r : nfa.successors(q, a)) { pred[a][r].insert(q); }
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            StateSet next = sim[p];
            for (SymbolId a = 0; a < sigma; ++a) {
                for (State p2 : nfa.successors(p, a)) {
                    StateSet matching(n);
                    sim[p2].for_each([&](State q2) { matching |= pred[a][q2]; });
                    next &= matching;
                }
            }
            if (!(next == sim[p])) {
                sim[p] = std::move(next);
                changed = true;
            }
        }
    }
    return sim;
}

/// Drops states whose language is covered by another member; of mutually similar states the smallest stays.
void prune(StateSet& s, const std::vector<StateSet>& sim) {
    std::vector<State> members;
    s.for_each([&](State q) { members.push_back(q); });
    for (State p : members) {
        for (State q : members) {
            if (q == p || !s.contains(q) || !sim[p].contains(q)) { continue; }
            if (!sim[q].contains(p) || q < p) {
                s.erase(p);
                break;
            }
        }
    }
}

/// Subsets beyond which the construction restarts with simulation pruning.
constexpr std::size_t plain_subset_limit = 4096;

/// Largest automaton on which the simulation is computed.
constexpr std::size_t simulation_state_limit = 1024;

struct Overflow {};

/// Subset construction; with `sim` each subset is pruned, otherwise Overflow is thrown past `cap` subsets.
Nfa build_subsets(const Nfa& trimmed, bool complete, const Limits& limits, const std::vector<StateSet>* sim,
                  std::size_t cap) {
    const std::size_t sigma = trimmed.alphabet().size();
    Nfa out(trimmed.alphabet());
    std::unordered_map<StateSet, State, StateSetHash> ids;
    std::vector<StateSet> subsets;
    std::optional<State> sink;

    auto intern = [&](StateSet s) -> State {
        if (sim != nullptr) { prune(s, *sim); }
        if (s.empty() && complete) {
            if (!sink) {
                sink = out.add_state();
                subsets.push_back(s);
                for (SymbolId a = 0; a < sigma; ++a) { out.add_transition(*sink, a, *sink); }
            }
            return *sink;
        }
        auto it = ids.find(s);
        if (it != ids.end()) { return it->second; }
        check_budget(subsets.size() + 1, limits);
        if (sim == nullptr && subsets.size() >= cap) { throw Overflow{}; }
        State q = out.add_state();
        out.set_accepting(q, detail::has_accepting(trimmed, s));
        ids.emplace(s, q);
        subsets.push_back(std::move(s));
        return q;
    };

    StateSet start = detail::initial_set(trimmed);
    if (start.empty() && !complete) { return out; }
    out.set_initial(intern(std::move(start)));
    for (State q = 0; q < out.num_states(); ++q) {
        if (sink && q == *sink) { continue; }
        for (SymbolId a = 0; a < sigma; ++a) {
            StateSet next = detail::post(trimmed, subsets[q], a);
            if (next.empty() && !complete) { continue; }
            State r = intern(std::move(next));
            out.add_transition(q, a, r);
        }
    }
    return out;
}

/// Determinizes a trimmed automaton, optionally adding an explicit sink to make it complete.
Nfa subset_construction(const Nfa& trimmed, bool complete, const Limits& limits) {
    bool deterministic = trimmed.initial_states().size() <= 1;
    for (State q = 0; deterministic && q < trimmed.num_states(); ++q) {
        for (SymbolId a = 0; a < trimmed.alphabet().size(); ++a) {
            if (trimmed.successors(q, a).size() > 1) { deterministic = false; }
        }
    }
    if (deterministic || trimmed.num_states() > simulation_state_limit) { return build_subsets(trimmed, complete, limits, nullptr, limits.state_budget); }
    try {
        return build_subsets(trimmed, complete, limits, nullptr, plain_subset_limit);
    } catch (const Overflow&) {
        const std::vector<StateSet> sim = simulation(trimmed);
        return build_subsets(trimmed, complete, limits, &sim, 0);
    }
}

/// Hopcroft partition refinement of a deterministic automaton; missing transitions go to an implicit sink.
Nfa refine_partition(const Nfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t sigma = dfa.alphabet().size();
    if (n == 0) { return dfa; }
    // state n is the sink completing the automaton
    const std::size_t total = n + 1;
    std::vector<std::vector<std::vector<std::uint32_t>>> inverse(sigma, std::vector<std::vector<std::uint32_t>>(total));
    for (State q = 0; q < n; ++q) {
        for (SymbolId a = 0; a < sigma; ++a) {
            auto succ = dfa.successors(q, a);
            inverse[a][succ.empty() ? n : succ.front()].push_back(q);
        }
    }
    for (SymbolId a = 0; a < sigma; ++a) { inverse[a][n].push_back(static_cast<std::uint32_t>(n)); }

    // Blocks are contiguous ranges of `elements`; marked states are swapped to the front of their block.
    std::vector<std::uint32_t> elements(total);
    std::vector<std::size_t> position(total);
    std::vector<std::size_t> block_of(total);
    std::vector<std::size_t> first;
    std::vector<std::size_t> last;
    std::vector<std::size_t> marked;
    {
        std::size_t i = 0;
        for (int accepting : {1, 0}) {
            std::size_t begin = i;
            for (std::size_t q = 0; q < total; ++q) {
                bool acc = q < n && dfa.is_accepting(static_cast<State>(q));
                if (acc == (accepting == 1)) {
                    elements[i] = static_cast<std::uint32_t>(q);
                    position[q] = i;
                    block_of[q] = first.size();
                    ++i;
                }
            }
            if (i > begin) {
                first.push_back(begin);
                last.push_back(i);
                marked.push_back(0);
            }
        }
    }
    std::vector<std::pair<std::size_t, SymbolId>> work;
    std::vector<std::vector<char>> in_work(first.size(), std::vector<char>(sigma, 1));
    for (std::size_t b = 0; b < first.size(); ++b) {
        for (SymbolId a = 0; a < sigma; ++a) { work.emplace_back(b, a); }
    }
    std::vector<std::size_t> touched;
    std::vector<std::uint32_t> splitter;
    while (!work.empty()) {
        auto [b, a] = work.back();
        work.pop_back();
        in_work[b][a] = 0;
        splitter.assign(elements.begin() + static_cast<std::ptrdiff_t>(first[b]),
                        elements.begin() + static_cast<std::ptrdiff_t>(last[b]));
        for (std::uint32_t t : splitter) {
            for (std::uint32_t src : inverse[a][t]) {
                std::size_t x = block_of[src];
                std::size_t slot = first[x] + marked[x];
                if (position[src] < slot) { continue; }
                if (marked[x] == 0) { touched.push_back(x); }
                std::uint32_t other = elements[slot];
                std::swap(elements[slot], elements[position[src]]);
                position[other] = position[src];
                position[src] = slot;
                ++marked[x];
            }
        }
        for (std::size_t x : touched) {
            std::size_t m = marked[x];
            marked[x] = 0;
            if (m == last[x] - first[x]) { continue; }
            std::size_t y = first.size();
            first.push_back(first[x]);
            last.push_back(first[x] + m);
            marked.push_back(0);
            first[x] += m;
            for (std::size_t i = first[y]; i < last[y]; ++i) { block_of[elements[i]] = y; }
            in_work.emplace_back(sigma, 0);
            for (SymbolId c = 0; c < sigma; ++c) {
                std::size_t pick = y;
                if (!in_work[x][c] && last[x] - first[x] < last[y] - first[y]) { pick = x; }
                if (in_work[x][c]) { pick = y; }
                if (!in_work[pick][c]) {
                    in_work[pick][c] = 1;
                    work.emplace_back(pick, c);
                }
            }
        }
        touched.clear();
    }
    // Renumber blocks, leaving out the sink's block.
    std::size_t sink_block = block_of[n];
    std::vector<std::size_t> cls(n);
    std::vector<long long> renamed(first.size(), -1);
    std::size_t count = 0;
    for (State q = 0; q < n; ++q) {
        std::size_t blk = block_of[q];
        if (blk == sink_block) { continue; }
        if (renamed[blk] < 0) { renamed[blk] = static_cast<long long>(count++); }
        cls[q] = static_cast<std::size_t>(renamed[blk]);
    }
    Nfa quotient(dfa.alphabet());
    for (std::size_t c = 0; c < count; ++c) { quotient.add_state(); }
    for (State q = 0; q < n; ++q) {
        if (block_of[q] == sink_block) { continue; }
        auto c = static_cast<State>(cls[q]);
        if (dfa.is_initial(q)) { quotient.set_initial(c); }
        if (dfa.is_accepting(q)) { quotient.set_accepting(c); }
        for (SymbolId a = 0; a < sigma; ++a) {
            for (State r : dfa.successors(q, a)) {
                if (block_of[r] != sink_block) { quotient.add_transition(c, a, static_cast<State>(cls[r])); }
            }
        }
    }
    return quotient;
}
} // namespace

Nfa empty_language(const Alphabet& alphabet) { return Nfa(alphabet); }

Nfa universal_language(const Alphabet& alphabet) {
    Nfa nfa(alphabet);
    State q = nfa.add_state();
    nfa.set_initial(q);
    nfa.set_accepting(q);
    for (SymbolId a = 0; a < alphabet.size(); ++a) { nfa.add_transition(q, a, q); }
    return nfa;
}

Nfa single_word(const Word& word, const Alphabet& alphabet) {
    auto ids = alphabet.encode(word);
    Nfa nfa(alphabet);
    State q = nfa.add_state();
    nfa.set_initial(q);
    for (SymbolId a : ids) {
        State r = nfa.add_state();
        nfa.add_transition(q, a, r);
        q = r;
    }
    nfa.set_accepting(q);
    return nfa;
}

Nfa with_alphabet(const Nfa& nfa, const Alphabet& alphabet) {
    if (nfa.alphabet() == alphabet) { return nfa; }
    Nfa out(alphabet);
    for (State q = 0; q < nfa.num_states(); ++q) {
        out.add_state(nfa.state_name(q));
        out.set_initial(q, nfa.is_initial(q));
        out.set_accepting(q, nfa.is_accepting(q));
    }
    for (const Transition& t : nfa.transitions()) {
        out.add_transition(t.from, alphabet.id(nfa.alphabet()[t.symbol]), t.to);
    }
    return out;
}

bool accepts(const Nfa& nfa, std::span<const SymbolId> word) {
    StateSet current = detail::initial_set(nfa);
    for (SymbolId a : word) {
        if (a >= nfa.alphabet().size()) { throw UnknownSymbol("#" + std::to_string(a)); }
        current = detail::post(nfa, current, a);
        if (current.empty()) { return false; }
    }
    return detail::has_accepting(nfa, current);
}

bool accepts(const Nfa& nfa, const Word& word) {
    auto ids = nfa.alphabet().encode(word);
    return accepts(nfa, std::span<const SymbolId>(ids));
}

Nfa trim(const Nfa& nfa) { return trim_impl(nfa, true); }

Nfa canonicalize(const Nfa& nfa) {
    std::vector<char> all(nfa.num_states(), 1);
    auto order = bfs_order(nfa, all);
    std::vector<char> placed(nfa.num_states(), 0);
    for (State q : order) { placed[q] = 1; }
    for (State q = 0; q < nfa.num_states(); ++q) { if (!placed[q]) { order.push_back(q); } }
    return renumber(nfa, order, true);
}

bool is_empty(const Nfa& nfa) {
    auto fwd = forward_reachable(nfa);
    for (State q = 0; q < nfa.num_states(); ++q) {
        if (fwd[q] && nfa.is_accepting(q)) { return false; }
    }
    return true;
}

Nfa intersect(const Nfa& a_in, const Nfa& b_in) {
    Alphabet sigma = unite(a_in.alphabet(), b_in.alphabet());
    Nfa a = with_alphabet(a_in, sigma);
    Nfa b = with_alphabet(b_in, sigma);
    Nfa out(sigma);
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State p, State q) {
        std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto it = ids.find(key);
        if (it != ids.end()) { return it->second; }
        State s = out.add_state();
        out.set_accepting(s, a.is_accepting(p) && b.is_accepting(q));
        ids.emplace(key, s);
        pairs.emplace_back(p, q);
        return s;
    };
    for (State p : a.initial_states()) {
        for (State q : b.initial_states()) { out.set_initial(intern(p, q)); }
    }
    for (State s = 0; s < out.num_states(); ++s) {
        auto [p, q] = pairs[s];
        for (SymbolId x = 0; x < sigma.size(); ++x) {
            for (State p2 : a.successors(p, x)) {
                for (State q2 : b.successors(q, x)) { out.add_transition(s, x, intern(p2, q2)); }
            }
        }
    }
    return trim_impl(out, false);
}

Nfa unite(const Nfa& a_in, const Nfa& b_in) {
    Alphabet sigma = unite(a_in.alphabet(), b_in.alphabet());
    Nfa out(sigma);
    for (const Nfa* part : {&a_in, &b_in}) {
        Nfa src = with_alphabet(*part, sigma);
        auto offset = static_cast<State>(out.num_states());
        for (State q = 0; q < src.num_states(); ++q) {
            State r = out.add_state();
            out.set_initial(r, src.is_initial(q));
            out.set_accepting(r, src.is_accepting(q));
        }
        for (const Transition& t : src.transitions()) {
            out.add_transition(t.from + offset, t.symbol, t.to + offset);
        }
    }
    return trim_impl(out, false);
}

Nfa determinize(const Nfa& nfa, const Limits& limits) {
    return subset_construction(trim_impl(nfa, false), false, limits);
}

Nfa minimize(const Nfa& nfa, const Limits& limits) {
    Nfa dfa = determinize(nfa, limits);
    return trim_impl(refine_partition(dfa), false);
}

Nfa complement(const Nfa& nfa, const Limits& limits) {
    Nfa complete = subset_construction(minimize(nfa, limits), true, limits);
    for (State q = 0; q < complete.num_states(); ++q) { complete.set_accepting(q, !complete.is_accepting(q)); }
    return trim_impl(complete, false);
}

Nfa difference(const Nfa& a, const Nfa& b, const Limits& limits) {
    Alphabet sigma = unite(a.alphabet(), b.alphabet());
    return intersect(with_alphabet(a, sigma), complement(with_alphabet(b, sigma), limits));
}

bool is_subset(const Nfa& a_in, const Nfa& b_in, const Limits& limits) {
    // Emptiness of L(a) \ L(b), exploring the product of `a` with the subset automaton of `b` lazily.
    Alphabet sigma = unite(a_in.alphabet(), b_in.alphabet());
    Nfa a = trim_impl(with_alphabet(a_in, sigma), false);
    Nfa b = with_alphabet(b_in, sigma);
    std::unordered_map<StateSet, std::size_t, StateSetHash> subset_ids;
    std::vector<StateSet> subsets;
    std::vector<char> subset_accepts;
    auto intern_subset = [&](StateSet s) {
        auto it = subset_ids.find(s);
        if (it != subset_ids.end()) { return it->second; }
        std::size_t id = subsets.size();
        subset_accepts.push_back(detail::has_accepting(b, s) ? 1 : 0);
        subset_ids.emplace(s, id);
        subsets.push_back(std::move(s));
        return id;
    };
    std::unordered_map<std::uint64_t, char> seen;
    std::deque<std::pair<State, std::size_t>> work;
    auto visit = [&](State p, std::size_t s) {
        std::uint64_t key = (std::uint64_t(s) << 32) | p;
        if (seen.emplace(key, 1).second) {
            check_budget(seen.size(), limits);
            work.emplace_back(p, s);
        }
    };
    std::size_t start = intern_subset(detail::initial_set(b));
    for (State p : a.initial_states()) { visit(p, start); }
    while (!work.empty()) {
        auto [p, s] = work.front();
        work.pop_front();
        if (a.is_accepting(p) && !subset_accepts[s]) { return false; }
        for (SymbolId x = 0; x < sigma.size(); ++x) {
            auto targets = a.successors(p, x);
            if (targets.empty()) { continue; }
            std::size_t next = intern_subset(detail::post(b, subsets[s], x));
            for (State p2 : targets) { visit(p2, next); }
        }
    }
    return true;
}

bool equivalent(const Nfa& a, const Nfa& b, const Limits& limits) {
    return is_subset(a, b, limits) && is_subset(b, a, limits);
}

std::optional<Word> shortest_word(const Nfa& nfa_in, const Limits& limits) {
    Nfa nfa = trim_impl(nfa_in, false);
    if (nfa.num_states() == 0) { return std::nullopt; }
    std::unordered_map<StateSet, std::size_t, StateSetHash> ids;
    std::vector<StateSet> subsets;
    std::vector<std::pair<std::size_t, SymbolId>> parent;
    subsets.push_back(detail::initial_set(nfa));
    ids.emplace(subsets.front(), 0);
    parent.emplace_back(0, 0);
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        if (detail::has_accepting(nfa, subsets[head])) {
            std::vector<SymbolId> letters;
            for (std::size_t s = head; s != 0; s = parent[s].first) { letters.push_back(parent[s].second); }
            std::reverse(letters.begin(), letters.end());
            return nfa.alphabet().decode(letters);
        }
        for (SymbolId x = 0; x < nfa.alphabet().size(); ++x) {
            StateSet next = detail::post(nfa, subsets[head], x);
            if (next.empty() || ids.contains(next)) { continue; }
            check_budget(subsets.size() + 1, limits);
            ids.emplace(next, subsets.size());
            subsets.push_back(std::move(next));
            parent.emplace_back(head, x);
        }
    }
    return std::nullopt;
}

void validate_path(const Nfa& nfa, const Path& path) {
    if (path.states.size() != path.symbols.size() + 1) {
        throw InvalidPath("path must have exactly one more state than symbols");
    }
    for (State q : path.states) {
        if (q >= nfa.num_states()) { throw InvalidPath("path references unknown state " + std::to_string(q)); }
    }
    for (std::size_t i = 0; i < path.symbols.size(); ++i) {
        if (path.symbols[i] >= nfa.alphabet().size()) { throw InvalidPath("path references unknown symbol"); }
        auto succ = nfa.successors(path.states[i], path.symbols[i]);
        if (!std::binary_search(succ.begin(), succ.end(), path.states[i + 1])) {
            throw InvalidPath("step " + std::to_string(i) + " is not a transition");
        }
    }
}

std::optional<Path> find_accepting_path(const Nfa& nfa, const Word& word) {
    auto ids = nfa.alphabet().encode(word);
    // layers[i] lists the states reached after i letters in discovery order
    std::vector<std::vector<State>> layers(ids.size() + 1);
    std::vector<std::vector<State>> parent(ids.size() + 1, std::vector<State>(nfa.num_states(), 0));
    std::vector<char> seen(nfa.num_states(), 0);
    for (State q : nfa.initial_states()) { layers[0].push_back(q); }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (State p : layers[i]) {
            for (State q : nfa.successors(p, ids[i])) {
                if (seen[q]) { continue; }
                seen[q] = 1;
                parent[i + 1][q] = p;
                layers[i + 1].push_back(q);
            }
        }
    }
    auto end = std::find_if(layers.back().begin(), layers.back().end(),
                            [&](State q) { return nfa.is_accepting(q); });
    if (end == layers.back().end()) { return std::nullopt; }
    Path path;
    path.symbols = ids;
    path.states.assign(ids.size() + 1, 0);
    path.states.back() = *end;
    for (std::size_t i = ids.size(); i > 0; --i) { path.states[i - 1] = parent[i][path.states[i]]; }
    return path;
}

} // namespace ptsep
