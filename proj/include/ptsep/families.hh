/* families.hh -- automata pairs with long finite towers and their witness words.
 *
 *  - quadratic (n odd, n >= 5): binary automata with n-1 and n states, tower length >= n^2 - 4n + 5
 *  - cubic (n divisible by 4, n >= 8): automata over {a,b,c,d} with n-1 and n states, tower length
 *    >= (n-2)(n^2/4 + n/2 - 2) + 1
 *  - exponential (m >= 0): A_m with 2 states and B_m with m+3 states over {a1..am, b, c}, tower
 *    length 2^(m+2)
 *
 * In every pair the first automaton accepts the witness word (or, for the exponential family, its
 * odd-length prefixes).
 */

#ifndef PTSEP_FAMILIES_HH_
#define PTSEP_FAMILIES_HH_

#include <string>
#include <utility>

#include "ptsep/chain.hh"

namespace ptsep {

enum class FamilyKind { quadratic, cubic, exponential };

struct FamilySpec {
    FamilyKind kind;
    unsigned parameter;  ///< n for quadratic and cubic, m for exponential
};

std::string to_string(FamilyKind kind);
/// Throws InvalidParameter on an unknown name.
FamilyKind parse_family_kind(const std::string& name);

/// Throws InvalidParameter unless the parameter suits the family.
void validate(const FamilySpec& spec);

/// (A0, A1) for quadratic and cubic, (A_m, B_m) for exponential.
std::pair<Nfa, Nfa> build_family(const FamilySpec& spec);

Word witness_word(const FamilySpec& spec);

/// Prefix tower of the witness word between the family automata.
Tower witness_tower(const FamilySpec& spec);

/// Lower bound on the witness tower length guaranteed for the family.
std::size_t guaranteed_tower_length(const FamilySpec& spec);

} // namespace ptsep

#endif // PTSEP_FAMILIES_HH_
