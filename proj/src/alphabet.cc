#include "ptsep/alphabet.hh"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "ptsep/error.hh"

namespace ptsep {

namespace {

bool has_space(std::string_view text) {
    return std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
}

} // namespace

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (const Symbol& s : symbols_) {
        if (s.empty()) { throw ParseError("empty symbol name"); }
        if (has_space(s)) { throw ParseError("symbol name '" + s + "' contains whitespace"); }
    }
    std::sort(symbols_.begin(), symbols_.end());
    auto dup = std::adjacent_find(symbols_.begin(), symbols_.end());
    if (dup != symbols_.end()) { throw ParseError("duplicate symbol '" + *dup + "'"); }
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end() || *it != name) { return std::nullopt; }
    return static_cast<SymbolId>(it - symbols_.begin());
}

SymbolId Alphabet::id(std::string_view name) const {
    if (auto found = find(name)) { return *found; }
    throw UnknownSymbol(std::string(name));
}

std::vector<SymbolId> Alphabet::encode(const Word& word) const {
    std::vector<SymbolId> ids;
    ids.reserve(word.size());
    for (const Symbol& s : word) { ids.push_back(id(s)); }
    return ids;
}

Word Alphabet::decode(const std::vector<SymbolId>& ids) const {
    Word word;
    word.reserve(ids.size());
    for (SymbolId id : ids) { word.push_back(symbols_.at(id)); }
    return word;
}

Alphabet unite(const Alphabet& lhs, const Alphabet& rhs) {
    if (lhs == rhs) { return lhs; }
    std::vector<Symbol> merged;
    std::set_union(lhs.symbols().begin(), lhs.symbols().end(), rhs.symbols().begin(),
                   rhs.symbols().end(), std::back_inserter(merged));
    return Alphabet(std::move(merged));
}

std::set<Symbol> letters_of(const Word& word) { return {word.begin(), word.end()}; }

Word word_of(std::string_view chars) {
    Word word;
    for (char c : chars) { word.emplace_back(1, c); }
    return word;
}

std::string format_word(const Word& word) {
    bool single = std::all_of(word.begin(), word.end(), [](const Symbol& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!single && i > 0) { out += ' '; }
        out += word[i];
    }
    return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    Word word;
    if (has_space(text)) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) { ++i; }
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) { ++j; }
            if (j > i) { word.push_back(alphabet[alphabet.id(text.substr(i, j - i))]); }
            i = j;
        }
        return word;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t best = 0;
        for (const Symbol& s : alphabet.symbols()) {
            if (s.size() > best && text.substr(i, s.size()) == s) { best = s.size(); }
        }
        if (best == 0) { throw UnknownSymbol(std::string(text.substr(i))); }
        word.emplace_back(text.substr(i, best));
        i += best;
    }
    return word;
}

} // namespace ptsep
