/* bounds.hh -- cyclic factorizations, factor weights and the tower length upper bound.
 *
 * A cyclic factorization splits a word along a run of an automaton into letter factors and cycle
 * factors, the latter being segments of the run that contain a cycle over exactly their own
 * alphabet. Weighting letter factors by 1 and a cycle factor over x letters by
 *
 *   g(x) = n (n^x - 1) / (n - 1) = n + n^2 + ... + n^x
 *
 * makes the weight strictly decrease down any tower between languages with no infinite tower,
 * which bounds tower length by g(m) + 1 = (n^(m+1) - 1) / (n - 1).
 */

#ifndef PTSEP_BOUNDS_HH_
#define PTSEP_BOUNDS_HH_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptsep/chain.hh"

namespace ptsep {

using Natural = boost::multiprecision::cpp_int;

/// 1 + n + ... + n^m; for n = 1 this is m + 1. Throws InvalidParameter for n = 0.
Natural upper_bound(std::uint64_t n, std::uint64_t m);

/// g(x) = n + n^2 + ... + n^x. Throws InvalidParameter for n = 0.
Natural cycle_weight(std::uint64_t n, std::uint64_t x);

enum class FactorKind { letter, cycle };

struct Factor {
    Word word;
    FactorKind kind;
    State from_state;
    State to_state;
    /// from_state for letter factors; a state on a cycle over alp(word) for cycle factors.
    State anchor_state;
    /// Offset of the factor in the factorized word.
    std::size_t offset;
};

struct CyclicFactorization {
    std::vector<Factor> factors;
    std::vector<State> boundary_states;  ///< q0 .. qk
    Word subject;
    std::size_t automaton_states;  ///< n used for weights

    std::size_t count(FactorKind kind) const;
};

/**
 * Greedy factorization along `path`: each factor is the longest prefix of the remaining run that
 * contains a cycle over exactly its own alphabet, or a single letter when no prefix does.
 * Throws InvalidPath.
 */
CyclicFactorization cyclic_factorize(const Nfa& nfa, const Path& path);

/// Greedy factorization of path steps [begin, end), weighted with `n` states.
CyclicFactorization cyclic_factorize(const Nfa& nfa, const Path& path, std::size_t begin, std::size_t end,
                                     std::size_t n);

/// True when the steps [begin, end) of `path` revisit some state with a loop over all their letters.
bool contains_full_cycle(const Path& path, std::size_t begin, std::size_t end);

struct WeightReport {
    std::vector<Natural> per_factor;
    Natural total;
};

WeightReport factorization_weight(const CyclicFactorization& factorization);

struct AuditLevel {
    Word word;
    Side side;
    CyclicFactorization factorization;
    WeightReport weight;
};

struct TowerAudit {
    std::vector<AuditLevel> levels;  ///< levels[i] belongs to tower word i
    Nfa first;                       ///< trimmed automata the runs were taken in
    Nfa second;
    std::size_t states;              ///< n: larger trimmed state count of the two automata
    std::size_t alphabet_size;       ///< m
    Natural top_bound;               ///< g(m)
    bool violation = false;          ///< some W_{i-1} >= W_i
    bool exceeds_top_bound = false;  ///< W_r > g(m)
};

/**
 * Refines a factorization of the top tower word down the tower: each lower word is split by its
 * leftmost embedding at the factor boundaries of the word above, and the pieces are factorized
 * along an accepting run of the lower word. Throws PathNotFound or InvalidTower.
 */
TowerAudit audit_tower_weights(const Tower& tower, const Nfa& first, const Nfa& second);

} // namespace ptsep

#endif // PTSEP_BOUNDS_HH_
