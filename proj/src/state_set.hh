/* state_set.hh -- fixed-width bit set of automaton states used by subset constructions.
 */

#ifndef PTSEP_SRC_STATE_SET_HH_
#define PTSEP_SRC_STATE_SET_HH_

#include <bit>
#include <cstdint>
#include <vector>

#include "ptsep/nfa.hh"

namespace ptsep::detail {

class StateSet {
public:
    explicit StateSet(std::size_t capacity) : bits_((capacity + 63) / 64, 0) {}

    void insert(State q) { bits_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void erase(State q) { bits_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }
    bool contains(State q) const { return (bits_[q >> 6] >> (q & 63)) & 1U; }

    bool empty() const {
        for (auto w : bits_) { if (w != 0) { return false; } }
        return true;
    }

    StateSet& operator|=(const StateSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) { bits_[i] |= other.bits_[i]; }
        return *this;
    }

    StateSet& operator&=(const StateSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) { bits_[i] &= other.bits_[i]; }
        return *this;
    }

    bool intersects(const StateSet& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if ((bits_[i] & other.bits_[i]) != 0) { return true; }
        }
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w != 0) {
                int bit = std::countr_zero(w);
                f(static_cast<State>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : bits_) { h = (h ^ w) * 1099511628211ULL; h ^= h >> 29; }
        return h;
    }

    bool operator==(const StateSet&) const = default;

private:
    std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

/// Successors of every state of `from` under `symbol`.
inline StateSet post(const Nfa& nfa, const StateSet& from, SymbolId symbol) {
    StateSet next(nfa.num_states());
    from.for_each([&](State q) {
        for (State r : nfa.successors(q, symbol)) { next.insert(r); }
    });
    return next;
}

inline StateSet initial_set(const Nfa& nfa) {
    StateSet s(nfa.num_states());
    for (State q = 0; q < nfa.num_states(); ++q) {
        if (nfa.is_initial(q)) { s.insert(q); }
    }
    return s;
}

inline bool has_accepting(const Nfa& nfa, const StateSet& s) {
    bool found = false;
    s.for_each([&](State q) { found = found || nfa.is_accepting(q); });
    return found;
}

} // namespace ptsep::detail

#endif // PTSEP_SRC_STATE_SET_HH_
