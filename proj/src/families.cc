#include "ptsep/families.hh"

#include "ptsep/error.hh"

namespace ptsep {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::quadratic: return "quadratic";
        case FamilyKind::cubic: return "cubic";
        case FamilyKind::exponential: return "exponential";
    }
    return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "quadratic") { return FamilyKind::quadratic; }
    if (name == "cubic") { return FamilyKind::cubic; }
    if (name == "exponential") { return FamilyKind::exponential; }
    throw InvalidParameter("unknown family '" + name + "'");
}

void validate(const FamilySpec& spec) {
    const unsigned p = spec.parameter;
    switch (spec.kind) {
        case FamilyKind::quadratic:
            if (p < 5 || p % 2 == 0) { throw InvalidParameter("quadratic family needs an odd n >= 5"); }
            break;
        case FamilyKind::cubic:
            if (p < 8 || p % 4 != 0) { throw InvalidParameter("cubic family needs n divisible by 4, n >= 8"); }
            break;
        case FamilyKind::exponential:
            // 64 symbols is the factorization limit; keep generated alphabets well below it.
            if (p > 60) { throw InvalidParameter("exponential family supports m <= 60"); }
            break;
    }
}

namespace {

/// Automaton with states named "1".."count".
Nfa numbered(const Alphabet& sigma, unsigned count) {
    Nfa nfa(sigma);
    for (unsigned i = 1; i <= count; ++i) { nfa.add_state(std::to_string(i)); }
    return nfa;
}

/// State named `i` of a numbered automaton.
State s(unsigned i) { return static_cast<State>(i - 1); }

std::pair<Nfa, Nfa> quadratic(unsigned n) {
    Alphabet sigma{"a", "b"};
    Nfa a0 = numbered(sigma, n - 1);
    a0.set_initial(s(1));
    a0.set_accepting(s(n - 1));
    for (unsigned i = 1; i + 1 <= n - 2; ++i) { a0.add_transition(s(i), "a", s(i + 1)); }
    for (unsigned i = 2; i <= n - 2; ++i) { a0.add_transition(s(1), "a", s(i)); }
    for (unsigned i = 1; i <= n - 3; ++i) { a0.add_transition(s(i), "b", s(i)); }
    a0.add_transition(s(n - 2), "b", s(n - 1));
    a0.add_transition(s(n - 1), "b", s(n - 2));

    Nfa a1 = numbered(sigma, n);
    a1.set_initial(s(1));
    a1.set_accepting(s(1));
    a1.set_accepting(s(n));
    for (unsigned i = 1; i < n; ++i) { a1.add_transition(s(i), "b", s(i + 1)); }
    a1.add_transition(s(n), "a", s(1));
    for (unsigned i = 2; i <= n; i += 2) { a1.add_transition(s(1), "b", s(i)); }
    return {std::move(a0), std::move(a1)};
}

std::pair<Nfa, Nfa> cubic(unsigned n) {
    Alphabet sigma{"a", "b", "c", "d"};
    Nfa a0 = numbered(sigma, n - 1);
    a0.set_initial(s(1));
    a0.set_accepting(s(n - 1));
    for (unsigned i = 1; i + 1 <= n - 2; ++i) { a0.add_transition(s(i), "a", s(i + 1)); }
    for (unsigned i = 2; i <= n - 2; ++i) { a0.add_transition(s(1), "a", s(i)); }
    for (unsigned i = 1; i <= n - 2; ++i) {
        for (const char* x : {"b", "c", "d"}) { a0.add_transition(s(i), x, s(i)); }
        a0.add_transition(s(i), "b", s(n - 1));
    }

    const unsigned half = n / 2;
    Nfa a1 = numbered(sigma, n);
    a1.set_initial(s(1));
    a1.set_accepting(s(half));
    a1.set_accepting(s(n));
    for (unsigned i = 1; i < half; ++i) {
        a1.add_transition(s(i), "d", s(i + 1));
        a1.add_transition(s(i), "b", s(i));
        a1.add_transition(s(i), "c", s(i));
    }
    for (unsigned i = 2; i <= half; ++i) { a1.add_transition(s(1), "d", s(i)); }
    // Alternating b, c path from n/2 up to n-1; n/2 is even, so b leads to odd states.
    for (unsigned i = half; i < n - 1; ++i) { a1.add_transition(s(i), (i - half) % 2 == 0 ? "b" : "c", s(i + 1)); }
    a1.add_transition(s(n - 1), "a", s(1));
    a1.add_transition(s(n - 1), "a", s(n));
    a1.add_transition(s(n - 1), "c", s(n));
    for (unsigned i = half + 1; i <= n - 1; i += 2) { a1.add_transition(s(half), "b", s(i)); }
    return {std::move(a0), std::move(a1)};
}

std::vector<Symbol> exponential_symbols(unsigned m) {
    std::vector<Symbol> symbols{"b", "c"};
    for (unsigned i = 1; i <= m; ++i) { symbols.push_back("a" + std::to_string(i)); }
    return symbols;
}

std::pair<Nfa, Nfa> exponential(unsigned m) {
    Alphabet sigma(exponential_symbols(m));
    Nfa a(sigma);
    State one = a.add_state("1");
    State two = a.add_state("2");
    a.set_initial(one);
    a.set_accepting(two);
    for (SymbolId x = 0; x < sigma.size(); ++x) { a.add_transition(one, x, one); }
    a.add_transition(one, "b", two);

    Nfa b(sigma);
    State p = b.add_state("p");
    State q = b.add_state("q");
    State r = b.add_state("r");
    b.set_initial(p);
    b.set_accepting(p);
    b.set_accepting(r);
    b.add_transition(p, "b", q);
    b.add_transition(q, "c", r);
    for (unsigned level = 1; level <= m; ++level) {
        const Symbol fresh = "a" + std::to_string(level);
        std::vector<State> previous_initial = b.initial_states();
        State top = b.add_state(std::to_string(level));
        b.set_initial(top);
        for (SymbolId x = 0; x < sigma.size(); ++x) {
            // self-loops under the alphabet of the previous level
            const Symbol& name = sigma[x];
            bool older = name == "b" || name == "c";
            if (!older && name.size() > 1) {
                unsigned index = static_cast<unsigned>(std::stoul(name.substr(1)));
                older = index < level;
            }
            if (older) { b.add_transition(top, x, top); }
        }
        for (State target : previous_initial) { b.add_transition(top, fresh, target); }
    }
    return {std::move(a), std::move(b)};
}

Word repeat(const Word& w, unsigned times) {
    Word out;
    for (unsigned i = 0; i < times; ++i) { out.insert(out.end(), w.begin(), w.end()); }
    return out;
}

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const Word& p : parts) { out.insert(out.end(), p.begin(), p.end()); }
    return out;
}

} // namespace

std::pair<Nfa, Nfa> build_family(const FamilySpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case FamilyKind::quadratic: return quadratic(spec.parameter);
        case FamilyKind::cubic: return cubic(spec.parameter);
        case FamilyKind::exponential: return exponential(spec.parameter);
    }
    throw InvalidParameter("unknown family");
}

Word witness_word(const FamilySpec& spec) {
    validate(spec);
    const unsigned n = spec.parameter;
    switch (spec.kind) {
        case FamilyKind::quadratic: {
            // (b^(n-1) a)^(n-3) b^(n-1) b
            Word block = concat({repeat(word_of("b"), n - 1), word_of("a")});
            return concat({repeat(block, n - 3), repeat(word_of("b"), n)});
        }
        case FamilyKind::cubic: {
            // [(bd (bc)^(n/4))^(n/2-2) bd (bc)^(n/4-1) ba]^(n-3) (bd (bc)^(n/4))^(n/2-2) bd (bc)^(n/4-1) bcb
            Word column = concat({word_of("bd"), repeat(word_of("bc"), n / 4)});
            Word body = concat({repeat(column, n / 2 - 2), word_of("bd"), repeat(word_of("bc"), n / 4 - 1)});
            return concat({repeat(concat({body, word_of("ba")}), n - 3), body, word_of("bcb")});
        }
        case FamilyKind::exponential: {
            Word w = word_of("bcb");
            for (unsigned level = 1; level <= n; ++level) {
                w = concat({w, Word{"a" + std::to_string(level)}, w});
            }
            return w;
        }
    }
    throw InvalidParameter("unknown family");
}

Tower witness_tower(const FamilySpec& spec) {
    auto [first, second] = build_family(spec);
    return longest_prefix_tower(witness_word(spec), first, second);
}

std::size_t guaranteed_tower_length(const FamilySpec& spec) {
    validate(spec);
    const std::size_t n = spec.parameter;
    switch (spec.kind) {
        case FamilyKind::quadratic: return n * n - 4 * n + 5;
        case FamilyKind::cubic: return (n - 2) * (n * n / 4 + n / 2 - 2) + 1;
        case FamilyKind::exponential: return std::size_t{1} << (n + 2);
    }
    return 0;
}

} // namespace ptsep
