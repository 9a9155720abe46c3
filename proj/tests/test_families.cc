#include "doctest.h"

#include "ptsep/chain.hh"
#include "ptsep/error.hh"
#include "ptsep/families.hh"
#include "support/random_nfa.hh"

using namespace ptsep;
using namespace ptsep::testing;

namespace {

Word repeat(const Word& w, std::size_t times) {
    Word out;
    for (std::size_t i = 0; i < times; ++i) { out.insert(out.end(), w.begin(), w.end()); }
    return out;
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const std::vector<FamilySpec> all_specs = {
    {FamilyKind::quadratic, 5},   {FamilyKind::quadratic, 7},   {FamilyKind::quadratic, 9},
    {FamilyKind::cubic, 8},       {FamilyKind::exponential, 0}, {FamilyKind::exponential, 1},
    {FamilyKind::exponential, 2}, {FamilyKind::exponential, 3},
};

} // namespace

TEST_CASE("family sizes") {
    auto [q0, q1] = build_family({FamilyKind::quadratic, 7});
    CHECK(q0.num_states() == 6);
    CHECK(q1.num_states() == 7);
    auto [e0, f0] = build_family({FamilyKind::exponential, 0});
    CHECK(e0.num_states() == 2);
    CHECK(f0.num_states() == 3);
    auto [c0, c1] = build_family({FamilyKind::cubic, 8});
    CHECK(c0.num_states() == 7);
    CHECK(c1.num_states() == 8);
    for (unsigned m = 0; m <= 3; ++m) {
        auto [am, bm] = build_family({FamilyKind::exponential, m});
        CHECK(am.alphabet().size() == m + 2);
        CHECK(bm.num_states() == 3 + m);
    }
}

TEST_CASE("quadratic automata follow the construction") {
    auto [a0, a1] = build_family({FamilyKind::quadratic, 7});
    // a-path of 4, three more a's from 1, b-loops on 1..4, b-cycle between 5 and 6
    CHECK(a0.num_transitions() == 4 + 3 + 4 + 2);
    CHECK(a0.accepting_states() == std::vector<State>{*a0.find_state("6")});
    // b-path of 6, a from 7 to 1, extra b's from 1 to 4 and 6
    CHECK(a1.num_transitions() == 6 + 1 + 2);
    CHECK(a1.accepting_states().size() == 2);
    CHECK(a1.is_accepting(*a1.find_state("1")));
    CHECK(a1.is_accepting(*a1.find_state("7")));
}

TEST_CASE("witness words") {
    Word quadratic = witness_word({FamilyKind::quadratic, 7});
    CHECK(quadratic.size() == 35);
    CHECK(quadratic == concat(repeat(concat(repeat(word_of("b"), 6), word_of("a")), 4), repeat(word_of("b"), 7)));
    CHECK(witness_word({FamilyKind::exponential, 1}) == Word{"b", "c", "b", "a1", "b", "c", "b"});
    CHECK(witness_word({FamilyKind::cubic, 8}).size() == 109);
    for (unsigned m = 0; m <= 4; ++m) {
        CHECK(witness_word({FamilyKind::exponential, m}).size() == (std::size_t{1} << (m + 2)) - 1);
    }
}

TEST_CASE("witness towers") {
    CHECK(witness_tower({FamilyKind::quadratic, 7}).length() >= 26);
    CHECK(witness_tower({FamilyKind::exponential, 2}).length() == 16);
    CHECK(witness_tower({FamilyKind::cubic, 8}).length() >= 109);
    for (const FamilySpec& spec : all_specs) {
        auto [first, second] = build_family(spec);
        Tower tower = witness_tower(spec);
        CHECK_NOTHROW(validate_tower(tower, first, second));
        CHECK(tower.length() >= guaranteed_tower_length(spec));
    }
}

TEST_CASE("guaranteed lengths") {
    for (unsigned n : {5u, 7u, 9u, 11u}) { CHECK(guaranteed_tower_length({FamilyKind::quadratic, n}) == n * n - 4 * n + 5); }
    CHECK(guaranteed_tower_length({FamilyKind::cubic, 8}) == 109);
    CHECK(guaranteed_tower_length({FamilyKind::cubic, 12}) == 10 * (36 + 6 - 2) + 1);
    for (unsigned m = 0; m <= 5; ++m) { CHECK(guaranteed_tower_length({FamilyKind::exponential, m}) == 4u << m); }
}

TEST_CASE("families are disjoint, accept their witnesses and have no infinite tower") {
    for (const FamilySpec& spec : all_specs) {
        CAPTURE(to_string(spec.kind));
        CAPTURE(spec.parameter);
        auto [first, second] = build_family(spec);
        CHECK(is_empty(intersect(first, second)));
        CHECK_FALSE(has_infinite_tower(first, second));
        Word w = witness_word(spec);
        if (spec.kind == FamilyKind::exponential) {
            for (std::size_t i = 0; i <= w.size(); ++i) {
                Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                CHECK(accepts(i % 2 == 1 ? first : second, prefix));
            }
        } else {
            CHECK(accepts(first, w));
        }
    }
}

TEST_CASE("exponential second languages grow with m") {
    for (unsigned m = 0; m < 3; ++m) {
        Nfa small = build_family({FamilyKind::exponential, m}).second;
        Nfa large = build_family({FamilyKind::exponential, m + 1}).second;
        CHECK(is_subset(small, large));
        CHECK_FALSE(is_subset(large, small));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate({FamilyKind::quadratic, 6}), InvalidParameter);
    CHECK_THROWS_AS(validate({FamilyKind::quadratic, 3}), InvalidParameter);
    CHECK_THROWS_AS(validate({FamilyKind::cubic, 6}), InvalidParameter);
    CHECK_THROWS_AS(validate({FamilyKind::cubic, 10}), InvalidParameter);
    CHECK_THROWS_AS(validate({FamilyKind::exponential, 61}), InvalidParameter);
    CHECK_NOTHROW(validate({FamilyKind::cubic, 12}));
    CHECK_THROWS_AS(build_family({FamilyKind::quadratic, 4}), InvalidParameter);
    CHECK(parse_family_kind("cubic") == FamilyKind::cubic);
    CHECK(to_string(FamilyKind::exponential) == "exponential");
    CHECK_THROWS_AS(parse_family_kind("quartic"), InvalidParameter);
}
