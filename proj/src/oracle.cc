#include "ptsep/oracle.hh"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "ptsep/closures.hh"
#include "ptsep/error.hh"
#include "state_set.hh"

namespace ptsep {

namespace {

std::size_t candidate_count(std::size_t sigma, std::size_t bound, std::size_t cap) {
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t len = 0; len <= bound; ++len) {
        total += layer;
        if (total > cap) { return total; }
        if (sigma != 0 && layer > cap / sigma) { return cap + 1; }
        layer *= sigma;
    }
    return total;
}

} // namespace

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t bound) {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= bound; ++len) {
        std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (const Symbol& a : alphabet.symbols()) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        layer_begin = layer_end;
    }
    return out;
}

BoundedLanguage enumerate_language(const Nfa& nfa, std::size_t bound, std::size_t word_budget) {
    if (candidate_count(nfa.alphabet().size(), bound, word_budget) > word_budget) {
        throw ResourceLimit("enumeration of words up to length " + std::to_string(bound) + " exceeds budget");
    }
    BoundedLanguage result;
    result.bound = bound;
    // depth-first over words, carrying the reachable state set
    struct Frame { Word word; detail::StateSet states; };
    std::vector<Frame> stack;
    stack.push_back({Word{}, detail::initial_set(nfa)});
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (detail::has_accepting(nfa, frame.states)) { result.words.insert(frame.word); }
        if (frame.word.size() == bound) { continue; }
        for (SymbolId a = 0; a < nfa.alphabet().size(); ++a) {
            detail::StateSet next = detail::post(nfa, frame.states, a);
            if (next.empty()) { continue; }
            Word w = frame.word;
            w.push_back(nfa.alphabet()[a]);
            stack.push_back({std::move(w), std::move(next)});
        }
    }
    return result;
}

OracleTower oracle_max_tower(const BoundedLanguage& first, const BoundedLanguage& second) {
    std::map<Symbol, std::uint32_t> codes;
    for (const auto* lang : {&first, &second}) {
        for (const Word& w : lang->words) {
            for (const Symbol& a : w) { codes.emplace(a, static_cast<std::uint32_t>(codes.size())); }
        }
    }
    struct Node { std::vector<std::uint32_t> word; std::size_t best = 1; };
    auto encode = [&](const BoundedLanguage& lang) {
        std::vector<Node> nodes;
        for (const Word& w : lang.words) {
            Node node;
            for (const Symbol& a : w) { node.word.push_back(codes.at(a)); }
            nodes.push_back(std::move(node));
        }
        // A proper embedding strictly increases length, so length order is a topological order.
        std::stable_sort(nodes.begin(), nodes.end(),
                         [](const Node& x, const Node& y) { return x.word.size() < y.word.size(); });
        return nodes;
    };
    auto embeds_codes = [](const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& w) {
        std::size_t j = 0;
        for (std::uint32_t x : v) {
            while (j < w.size() && w[j] != x) { ++j; }
            if (j == w.size()) { return false; }
            ++j;
        }
        return true;
    };
    std::array<std::vector<Node>, 2> side{encode(first), encode(second)};
    std::array<std::size_t, 2> next{0, 0};
    OracleTower result;
    // Sweep both sides in increasing length; every shorter node is final when a length is reached.
    while (next[0] < side[0].size() || next[1] < side[1].size()) {
        std::size_t len = SIZE_MAX;
        for (int s : {0, 1}) {
            if (next[s] < side[s].size()) { len = std::min(len, side[s][next[s]].word.size()); }
        }
        for (int s : {0, 1}) {
            auto& own = side[s];
            const auto& opposite = side[1 - s];
            for (; next[s] < own.size() && own[next[s]].word.size() == len; ++next[s]) {
                Node& node = own[next[s]];
                for (const Node& below : opposite) {
                    if (below.word.size() >= len) { break; }
                    if (below.best + 1 > node.best && embeds_codes(below.word, node.word)) { node.best = below.best + 1; }
                }
                result.length = std::max(result.length, node.best);
            }
        }
    }
    for (const Word& w : first.words) {
        if (second.words.contains(w)) { result.shared_word = true; break; }
    }
    return result;
}

} // namespace ptsep
