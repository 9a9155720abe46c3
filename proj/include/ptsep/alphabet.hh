/* alphabet.hh -- symbols, alphabets and words.
 */

#ifndef PTSEP_ALPHABET_HH_
#define PTSEP_ALPHABET_HH_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ptsep {

using Symbol = std::string;
using SymbolId = std::uint32_t;

/// A finite word; the empty vector is the empty word.
using Word = std::vector<Symbol>;

/**
 * Ordered set of symbols.
 *
 * Symbols are kept sorted by name; the position of a symbol in this order is its SymbolId and
 * defines the canonical symbol order used for tie-breaking everywhere (shortest words, state
 * numbering, serialization).
 */
class Alphabet {
public:
    Alphabet() = default;
    /// Throws ParseError on empty names, names containing whitespace or duplicates.
    explicit Alphabet(std::vector<Symbol> symbols);
    Alphabet(std::initializer_list<Symbol> symbols) : Alphabet(std::vector<Symbol>(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](SymbolId id) const { return symbols_[id]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    std::optional<SymbolId> find(std::string_view name) const;
    /// Throws UnknownSymbol.
    SymbolId id(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    /// Symbol ids of a word; throws UnknownSymbol.
    std::vector<SymbolId> encode(const Word& word) const;
    Word decode(const std::vector<SymbolId>& ids) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Symbol> symbols_;
};

/// Ordered union of two alphabets.
Alphabet unite(const Alphabet& lhs, const Alphabet& rhs);

/// alp(w): the set of letters occurring in the word.
std::set<Symbol> letters_of(const Word& word);

/// Each character becomes one symbol: word_of("abba") == {"a","b","b","a"}.
Word word_of(std::string_view chars);

/// Concatenates letters when every letter is a single character, otherwise joins them with spaces.
std::string format_word(const Word& word);

/**
 * Inverse of format_word. Whitespace-separated text is split on whitespace; otherwise the text
 * is tokenized by longest match against the alphabet. Throws UnknownSymbol on leftovers.
 */
Word parse_word(std::string_view text, const Alphabet& alphabet);

} // namespace ptsep

#endif // PTSEP_ALPHABET_HH_
