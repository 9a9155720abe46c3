#include "ptsep/chain.hh"

#include <stdexcept>

#include "ptsep/closures.hh"
#include "ptsep/error.hh"
#include "state_set.hh"

namespace ptsep {

std::string to_string(Side s) { return s == Side::first ? "first" : "second"; }

void validate_tower(const Tower& tower, const Nfa& first, const Nfa& second) {
    if (tower.words.empty()) { throw InvalidTower("empty tower"); }
    if (tower.words.size() != tower.sides.size()) { throw InvalidTower("words and sides differ in length"); }
    for (std::size_t i = 0; i < tower.words.size(); ++i) {
        const Nfa& side = tower.sides[i] == Side::first ? first : second;
        bool member = false;
        try {
            member = accepts(side, tower.words[i]);
        } catch (const UnknownSymbol&) {
            member = false;
        }
        if (!member) {
            throw InvalidTower("word " + std::to_string(i) + " '" + format_word(tower.words[i]) +
                               "' is not in the " + to_string(tower.sides[i]) + " language");
        }
        if (i + 1 < tower.words.size()) {
            if (tower.sides[i] == tower.sides[i + 1]) { throw InvalidTower("sides do not alternate at " + std::to_string(i)); }
            if (!embeds(tower.words[i], tower.words[i + 1])) {
                throw InvalidTower("word " + std::to_string(i) + " does not embed into its successor");
            }
        }
    }
}

std::size_t ChainTrace::nonempty_depth() const {
    std::size_t depth = 0;
    for (std::size_t k = 1; k < levels.size(); ++k) {
        if (is_empty(levels[k].first)) { return depth; }
        ++depth;
        if (is_empty(levels[k].second)) { return depth; }
        ++depth;
    }
    return depth;
}

const Nfa& ChainTrace::language_at(std::size_t t) const {
    if (t == 0) { return levels.at(0).second; }
    const ChainLevel& level = levels.at((t + 1) / 2);
    return t % 2 == 1 ? level.first : level.second;
}

ChainTrace run_chain(const Nfa& first_in, const Nfa& second_in, const ChainOptions& options) {
    Alphabet sigma = unite(first_in.alphabet(), second_in.alphabet());
    ChainTrace trace{{}, Exhausted{options.max_levels}};
    trace.levels.push_back({minimize(with_alphabet(first_in, sigma), options.limits),
                            minimize(with_alphabet(second_in, sigma), options.limits)});
    for (std::size_t k = 1; k <= options.max_levels; ++k) {
        const ChainLevel& prev = trace.levels.back();
        Nfa left = minimize(intersect(prev.first, downward_closure(prev.second)), options.limits);
        Nfa right = minimize(intersect(prev.second, downward_closure(left)), options.limits);
        bool left_empty = is_empty(left);
        bool right_empty = is_empty(right);
        // The chain is decreasing, so one inclusion suffices for equality.
        bool fixed = !left_empty && !right_empty && is_subset(prev.first, left, options.limits) &&
                     is_subset(prev.second, right, options.limits);
        trace.levels.push_back({std::move(left), std::move(right)});
        if (left_empty && right_empty) {
            trace.verdict = Separable{k};
            return trace;
        }
        if (fixed) {
            trace.verdict = InfiniteTower{};
            return trace;
        }
    }
    return trace;
}

namespace {

void require_decided(const ChainTrace& trace) {
    if (trace.exhausted()) {
        throw Undecided("chain did not stabilize within " + std::to_string(std::get<Exhausted>(trace.verdict).limit) +
                        " levels");
    }
}

} // namespace

bool has_infinite_tower(const Nfa& first, const Nfa& second, const ChainOptions& options) {
    ChainTrace trace = run_chain(first, second, options);
    require_decided(trace);
    return trace.infinite();
}

std::size_t TowerLength::value() const {
    if (infinite_) { throw std::logic_error("tower length is infinite"); }
    return value_;
}

std::string TowerLength::to_string() const { return infinite_ ? "infinite" : std::to_string(value_); }

namespace {

struct Orientations {
    ChainTrace forward;   // first plays L0
    ChainTrace backward;  // second plays L0
};

Orientations run_both(const Nfa& first, const Nfa& second, const ChainOptions& options) {
    Orientations o{run_chain(first, second, options), run_chain(second, first, options)};
    require_decided(o.forward);
    require_decided(o.backward);
    return o;
}

} // namespace

TowerLength max_tower_length(const Nfa& first, const Nfa& second, const ChainOptions& options) {
    if (is_empty(first) && is_empty(second)) { return TowerLength::finite(0); }
    Orientations o = run_both(first, second, options);
    if (o.forward.infinite() || o.backward.infinite()) { return TowerLength::infinite(); }
    return TowerLength::finite(1 + std::max(o.forward.nonempty_depth(), o.backward.nonempty_depth()));
}

Tower extract_tower(const Nfa& first, const Nfa& second, const ChainOptions& options) {
    if (is_empty(first) && is_empty(second)) { throw NoTower("both languages are empty"); }
    Orientations o = run_both(first, second, options);
    if (o.forward.infinite() || o.backward.infinite()) { throw NotSeparable("there is an infinite tower"); }

    std::size_t forward_depth = o.forward.nonempty_depth();
    std::size_t backward_depth = o.backward.nonempty_depth();
    bool use_forward = forward_depth >= backward_depth;
    const ChainTrace& trace = use_forward ? o.forward : o.backward;
    std::size_t depth = use_forward ? forward_depth : backward_depth;
    // In the chosen orientation the language at odd t belongs to the L side.
    Side l_side = use_forward ? Side::first : Side::second;

    Tower tower;
    if (depth == 0) {
        bool first_nonempty = !is_empty(first);
        const Nfa& source = first_nonempty ? first : second;
        tower.words.push_back(*shortest_word(source, options.limits));
        tower.sides.push_back(first_nonempty ? Side::first : Side::second);
        return tower;
    }
    const Alphabet& sigma = trace.levels[0].first.alphabet();
    Word current = *shortest_word(trace.language_at(depth), options.limits);
    for (std::size_t t = depth + 1; t-- > 0;) {
        if (t < depth) {
            Nfa above = upward_closure(single_word(current, sigma));
            current = *shortest_word(intersect(trace.language_at(t), above), options.limits);
        }
        tower.words.push_back(current);
        tower.sides.push_back(t % 2 == 1 ? l_side : other(l_side));
    }
    return tower;
}

Tower longest_prefix_tower(const Word& word, const Nfa& first_in, const Nfa& second_in) {
    Alphabet sigma = unite(first_in.alphabet(), second_in.alphabet());
    Nfa first = with_alphabet(first_in, sigma);
    Nfa second = with_alphabet(second_in, sigma);
    auto ids = sigma.encode(word);

    detail::StateSet in_first = detail::initial_set(first);
    detail::StateSet in_second = detail::initial_set(second);
    // label[i] describes the prefix of length i.
    std::vector<std::optional<Side>> label(ids.size() + 1);
    for (std::size_t i = 0; i <= ids.size(); ++i) {
        if (i > 0) {
            in_first = detail::post(first, in_first, ids[i - 1]);
            in_second = detail::post(second, in_second, ids[i - 1]);
        }
        bool f = detail::has_accepting(first, in_first);
        bool s = detail::has_accepting(second, in_second);
        if (f && s) {
            throw AmbiguousMembership("prefix of length " + std::to_string(i) + " belongs to both languages");
        }
        if (f) { label[i] = Side::first; }
        if (s) { label[i] = Side::second; }
    }

    // With two labels a longest alternating subsequence takes exactly one prefix from every maximal
    // run of equal labels; taking the first of each run gives the earliest index set.
    Tower tower;
    for (std::size_t i = 0; i <= ids.size(); ++i) {
        if (!label[i]) { continue; }
        if (!tower.sides.empty() && tower.sides.back() == *label[i]) { continue; }
        tower.words.emplace_back(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        tower.sides.push_back(*label[i]);
    }
    return tower;
}

} // namespace ptsep
