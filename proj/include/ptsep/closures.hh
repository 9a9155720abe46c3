/* closures.hh -- subsequence embedding and the downward/upward closures of regular languages.
 */

#ifndef PTSEP_CLOSURES_HH_
#define PTSEP_CLOSURES_HH_

#include <optional>
#include <vector>

#include "ptsep/nfa.hh"

namespace ptsep {

/// Positions in the host word hit by each letter of the embedded word, strictly increasing.
struct EmbeddingWitness {
    std::vector<std::size_t> positions;
    bool operator==(const EmbeddingWitness&) const = default;
};

/// Leftmost embedding of `v` into `w`, if v is a subsequence of w.
std::optional<EmbeddingWitness> is_subsequence(const Word& v, const Word& w);
bool embeds(const Word& v, const Word& w);

/**
 * Downward closure: all subsequences of accepted words.
 *
 * Built without epsilon transitions: every transition (q, a, q') is widened to (q, a, q'') for each
 * q'' reachable from q' by any sequence of transitions, and the initial set is widened the same way.
 */
Nfa downward_closure(const Nfa& nfa);

/// Upward closure: all words having an accepted word as a subsequence (self-loops on every state).
Nfa upward_closure(const Nfa& nfa);

/// `w` is a subsequence of some word of L(nfa). Throws UnknownSymbol.
bool embeds_into_language(const Word& w, const Nfa& nfa);

} // namespace ptsep

#endif // PTSEP_CLOSURES_HH_
