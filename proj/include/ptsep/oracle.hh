/* oracle.hh -- brute-force reference computations on bounded slices of languages.
 */

#ifndef PTSEP_ORACLE_HH_
#define PTSEP_ORACLE_HH_

#include <set>
#include <vector>

#include "ptsep/nfa.hh"

namespace ptsep {

/// All accepted words of length <= bound.
struct BoundedLanguage {
    std::set<Word> words;
    std::size_t bound = 0;
};

/// Throws ResourceLimit when more than `word_budget` candidate words would be generated.
BoundedLanguage enumerate_language(const Nfa& nfa, std::size_t bound, std::size_t word_budget = 10'000'000);

/// Every word over `alphabet` of length <= bound, in length-lexicographic order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t bound);

struct OracleTower {
    std::size_t length = 0;
    /// Some word lies in both sets (the languages then have an infinite tower).
    bool shared_word = false;
};

/// Longest alternating embedding chain across the two finite sets.
OracleTower oracle_max_tower(const BoundedLanguage& first, const BoundedLanguage& second);

} // namespace ptsep

#endif // PTSEP_ORACLE_HH_
