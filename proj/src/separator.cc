#include "ptsep/separator.hh"

#include "ptsep/closures.hh"
#include "ptsep/error.hh"

namespace ptsep {

SeparatorResult synthesize(const Nfa& first, const Nfa& second, const ChainOptions& options) {
    ChainTrace chain = run_chain(first, second, options);
    if (chain.infinite()) { throw NotSeparable("there is an infinite tower between the languages"); }
    if (chain.exhausted()) { throw Undecided("chain did not stabilize within " + std::to_string(options.max_levels) + " levels"); }

    const std::size_t bound = std::get<Separable>(chain.verdict).bound;
    const Nfa& l0 = chain.levels[0].first;
    const Nfa& r0 = chain.levels[0].second;
    SeparatorResult result{empty_language(l0.alphabet()), {}, {}};
    for (std::size_t k = 1; k <= bound; ++k) {
        Nfa keep = upward_closure(difference(r0, chain.levels[k].second, options.limits));
        Nfa drop = upward_closure(difference(l0, chain.levels[k].first, options.limits));
        Nfa level = minimize(difference(keep, drop, options.limits), options.limits);
        result.separator = unite(result.separator, level);
        result.levels.push_back(std::move(level));
    }
    result.separator = minimize(result.separator, options.limits);
    result.chain = std::move(chain);
    return result;
}

bool verify_separator(const Nfa& s, const Nfa& first, const Nfa& second, const Limits& limits) {
    return is_subset(second, s, limits) && is_empty(intersect(s, first));
}

Nfa pieces_language(const PieceSet& pieces, const Alphabet& alphabet) {
    Nfa out = empty_language(alphabet);
    for (const Word& w : pieces) { out = unite(out, upward_closure(single_word(w, alphabet))); }
    return out;
}

PieceSet minimal_pieces(const Nfa& upclosed, const Limits& limits) {
    if (!is_subset(upward_closure(upclosed), upclosed, limits)) {
        throw NotUpwardClosed("language is not upward closed");
    }
    // The length-lexicographically smallest word not yet covered has every proper subsequence either
    // outside the language or covered already, so it is a new minimal element.
    PieceSet pieces;
    Nfa covered = empty_language(upclosed.alphabet());
    while (auto next = shortest_word(difference(upclosed, covered, limits), limits)) {
        covered = unite(covered, upward_closure(single_word(*next, upclosed.alphabet())));
        pieces.push_back(std::move(*next));
    }
    return pieces;
}

LevelPieces level_pieces(const SeparatorResult& result, std::size_t k, const Limits& limits) {
    const auto& levels = result.chain.levels;
    if (k == 0 || k >= levels.size()) { throw InvalidParameter("no separator level " + std::to_string(k)); }
    return {minimal_pieces(upward_closure(difference(levels[0].second, levels[k].second, limits)), limits),
            minimal_pieces(upward_closure(difference(levels[0].first, levels[k].first, limits)), limits)};
}

} // namespace ptsep
