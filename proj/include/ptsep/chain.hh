/* chain.hh -- the decreasing chain of embeddable sublanguages and what it decides.
 *
 * Starting from L0 = L(first) and R0 = L(second), the chain keeps
 *
 *   L_k = L_{k-1} ∩ down(R_{k-1}),   R_k = R_{k-1} ∩ down(L_k),
 *
 * until both languages are empty (the inputs are separable by a piecewise testable language) or
 * the chain reaches a non-empty fixed point (there is an infinite tower).
 */

#ifndef PTSEP_CHAIN_HH_
#define PTSEP_CHAIN_HH_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ptsep/nfa.hh"

namespace ptsep {

enum class Side { first, second };

inline Side other(Side s) { return s == Side::first ? Side::second : Side::first; }
std::string to_string(Side s);

/// Alternating subsequence tower: words[i] embeds into words[i+1] and sides alternate.
struct Tower {
    std::vector<Word> words;
    std::vector<Side> sides;

    std::size_t length() const noexcept { return words.size(); }
    bool operator==(const Tower&) const = default;
};

/// Throws InvalidTower unless `tower` is a non-empty alternating tower between the two languages.
void validate_tower(const Tower& tower, const Nfa& first, const Nfa& second);

struct ChainLevel {
    Nfa first;   ///< L_k
    Nfa second;  ///< R_k
};

struct Separable { std::size_t bound; };  ///< first level B with L_B and R_B empty
struct InfiniteTower {};
struct Exhausted { std::size_t limit; };
using Verdict = std::variant<Separable, InfiniteTower, Exhausted>;

struct ChainTrace {
    std::vector<ChainLevel> levels;  ///< levels[0] holds the minimized inputs
    Verdict verdict;

    bool separable() const { return std::holds_alternative<Separable>(verdict); }
    bool infinite() const { return std::holds_alternative<InfiniteTower>(verdict); }
    bool exhausted() const { return std::holds_alternative<Exhausted>(verdict); }

    /**
     * Number of non-empty languages in L1, R1, L2, R2, ...; a tower of length t+1 with its top
     * word in R0 exists exactly when the t-th of them is non-empty.
     */
    std::size_t nonempty_depth() const;
    /// t-th language of the sequence R0, L1, R1, L2, R2, ...
    const Nfa& language_at(std::size_t t) const;
};

struct ChainOptions {
    std::size_t max_levels = 4096;
    Limits limits;
};

ChainTrace run_chain(const Nfa& first, const Nfa& second, const ChainOptions& options = {});

/// Throws Undecided if the chain exhausts its level budget.
bool has_infinite_tower(const Nfa& first, const Nfa& second, const ChainOptions& options = {});

class TowerLength {
public:
    static TowerLength finite(std::size_t value) { return TowerLength(false, value); }
    static TowerLength infinite() { return TowerLength(true, 0); }

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws std::logic_error when infinite.
    std::size_t value() const;
    std::string to_string() const;

    bool operator==(const TowerLength&) const = default;

private:
    TowerLength(bool infinite, std::size_t value) : infinite_(infinite), value_(value) {}
    bool infinite_;
    std::size_t value_;
};

/// Exact length of the longest tower between the languages, from the chain run in both orientations.
TowerLength max_tower_length(const Nfa& first, const Nfa& second, const ChainOptions& options = {});

/// A tower of length max_tower_length. Throws NotSeparable, Undecided or NoTower.
Tower extract_tower(const Nfa& first, const Nfa& second, const ChainOptions& options = {});

/**
 * Longest tower made of prefixes of `word` (the empty prefix included). Among the longest ones the
 * lexicographically earliest set of prefix lengths is returned. Throws AmbiguousMembership when a
 * prefix belongs to both languages.
 */
Tower longest_prefix_tower(const Word& word, const Nfa& first, const Nfa& second);

} // namespace ptsep

#endif // PTSEP_CHAIN_HH_
