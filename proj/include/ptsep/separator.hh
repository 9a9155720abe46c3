/* separator.hh -- piecewise testable separators built from the chain.
 */

#ifndef PTSEP_SEPARATOR_HH_
#define PTSEP_SEPARATOR_HH_

#include <vector>

#include "ptsep/chain.hh"

namespace ptsep {

struct SeparatorResult {
    /// Language S: contains L(second) and is disjoint from L(first).
    Nfa separator;
    /// levels[k-1] is S_k = up(R0 \ R_k) \ up(L0 \ L_k) for k = 1..B.
    std::vector<Nfa> levels;
    /// The chain the separator was built from.
    ChainTrace chain;
};

/// Throws NotSeparable on an infinite tower and Undecided when the chain is exhausted.
SeparatorResult synthesize(const Nfa& first, const Nfa& second, const ChainOptions& options = {});

/// L(second) is contained in L(s) and L(s) does not meet L(first).
bool verify_separator(const Nfa& s, const Nfa& first, const Nfa& second, const Limits& limits = {});

/// Pairwise incomparable words whose upward closures cover an upward-closed language.
using PieceSet = std::vector<Word>;

/**
 * The subsequence-minimal words of an upward-closed language, in length-lexicographic order.
 *
 * Throws NotUpwardClosed when `upclosed` differs from its upward closure.
 */
PieceSet minimal_pieces(const Nfa& upclosed, const Limits& limits = {});

/// S_k spelled out as (union of L_w over keep) minus (union of L_w over drop).
struct LevelPieces {
    PieceSet keep;  ///< minimal words of up(R0 \ R_k)
    PieceSet drop;  ///< minimal words of up(L0 \ L_k)
};

/// Pieces of level k (1-based) of a synthesized separator.
LevelPieces level_pieces(const SeparatorResult& result, std::size_t k, const Limits& limits = {});

/// Union of the upward closures of the given words.
Nfa pieces_language(const PieceSet& pieces, const Alphabet& alphabet);

} // namespace ptsep

#endif // PTSEP_SEPARATOR_HH_
