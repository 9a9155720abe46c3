#include "ptsep/io.hh"

#include <iomanip>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "ptsep/error.hh"

namespace ptsep::io {

namespace {

void require_fields(const Json& doc, const std::set<std::string>& allowed, const std::string& what) {
    if (!doc.is_object()) { throw ParseError(what + " must be a JSON object"); }
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.contains(key)) { throw ParseError("unknown field '" + key + "' in " + what); }
    }
    for (const std::string& key : allowed) {
        if (!doc.contains(key)) { throw ParseError("missing field '" + key + "' in " + what); }
    }
}

std::vector<std::string> string_array(const Json& doc, const std::string& key) {
    const Json& arr = doc.at(key);
    if (!arr.is_array()) { throw ParseError("field '" + key + "' must be an array"); }
    std::vector<std::string> out;
    for (const Json& item : arr) {
        if (!item.is_string()) { throw ParseError("field '" + key + "' must contain strings"); }
        out.push_back(item.get<std::string>());
    }
    return out;
}

State state_ref(const Nfa& nfa, const std::string& name) {
    if (auto q = nfa.find_state(name)) { return *q; }
    throw ParseError("unknown state '" + name + "'");
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') { out += '\\'; }
        out += c;
    }
    return out + "\"";
}

std::string unquote(const std::string& s) {
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\' && i + 2 < s.size()) { ++i; }
        out += s[i];
    }
    return out;
}

} // namespace

Json automaton_to_json(const Nfa& nfa) {
    Json doc;
    doc["alphabet"] = nfa.alphabet().symbols();
    Json states = Json::array();
    Json initial = Json::array();
    Json accepting = Json::array();
    for (State q = 0; q < nfa.num_states(); ++q) {
        states.push_back(nfa.state_name(q));
        if (nfa.is_initial(q)) { initial.push_back(nfa.state_name(q)); }
        if (nfa.is_accepting(q)) { accepting.push_back(nfa.state_name(q)); }
    }
    doc["states"] = states;
    doc["initial"] = initial;
    doc["accepting"] = accepting;
    Json transitions = Json::array();
    for (const Transition& t : nfa.transitions()) {
        transitions.push_back({{"from", nfa.state_name(t.from)},
                               {"symbol", nfa.alphabet()[t.symbol]},
                               {"to", nfa.state_name(t.to)}});
    }
    doc["transitions"] = transitions;
    return doc;
}

Nfa automaton_from_json(const Json& doc) {
    require_fields(doc, {"alphabet", "states", "initial", "accepting", "transitions"}, "automaton");
    Nfa nfa(Alphabet(string_array(doc, "alphabet")));
    for (const std::string& name : string_array(doc, "states")) {
        if (name.empty()) { throw ParseError("empty state name"); }
        nfa.add_state(name);
    }
    for (const std::string& name : string_array(doc, "initial")) { nfa.set_initial(state_ref(nfa, name)); }
    for (const std::string& name : string_array(doc, "accepting")) { nfa.set_accepting(state_ref(nfa, name)); }
    const Json& transitions = doc.at("transitions");
    if (!transitions.is_array()) { throw ParseError("field 'transitions' must be an array"); }
    for (const Json& t : transitions) {
        require_fields(t, {"from", "symbol", "to"}, "transition");
        if (!t["from"].is_string() || !t["symbol"].is_string() || !t["to"].is_string()) {
            throw ParseError("transition fields must be strings");
        }
        auto symbol = nfa.alphabet().find(t["symbol"].get<std::string>());
        if (!symbol) { throw ParseError("unknown symbol '" + t["symbol"].get<std::string>() + "'"); }
        nfa.add_transition(state_ref(nfa, t["from"].get<std::string>()), *symbol,
                           state_ref(nfa, t["to"].get<std::string>()));
    }
    return nfa;
}

Nfa automaton_from_json_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return automaton_from_json(doc);
}

std::string automaton_to_dot(const Nfa& nfa) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  // alphabet:";
    for (const Symbol& a : nfa.alphabet().symbols()) { out << ' ' << a; }
    out << "\n  rankdir=LR;\n  node [shape=circle];\n";
    for (State q = 0; q < nfa.num_states(); ++q) {
        out << "  " << quote(nfa.state_name(q));
        if (nfa.is_accepting(q)) { out << " [shape=doublecircle]"; }
        out << ";\n";
    }
    for (State q : nfa.initial_states()) {
        std::string marker = quote("__start" + std::to_string(q));
        out << "  " << marker << " [shape=point, label=\"\"];\n";
        out << "  " << marker << " -> " << quote(nfa.state_name(q)) << " [arrowhead=none];\n";
    }
    std::map<std::pair<State, State>, std::vector<std::string>> labels;
    for (const Transition& t : nfa.transitions()) { labels[{t.from, t.to}].push_back(nfa.alphabet()[t.symbol]); }
    for (const auto& [edge, symbols] : labels) {
        std::string label;
        for (const auto& s : symbols) { label += (label.empty() ? "" : ",") + s; }
        out << "  " << quote(nfa.state_name(edge.first)) << " -> " << quote(nfa.state_name(edge.second))
            << " [label=" << quote(label) << "];\n";
    }
    out << "}\n";
    return out.str();
}

Nfa automaton_from_dot(std::string_view text) {
    static const std::string id = R"("(?:[^"\\]|\\.)*")";
    static const std::regex alphabet_line(R"(^\s*//\s*alphabet:(.*)$)");
    static const std::regex marker_line("^\\s*" + id + R"(\s*\[shape=point[^\]]*\];\s*$)");
    static const std::regex node_line("^\\s*(" + id + R"()\s*(\[shape=doublecircle\])?;\s*$)");
    static const std::regex entry_line("^\\s*(" + id + R"()\s*->\s*()" + id + R"()\s*\[arrowhead=none\];\s*$)");
    static const std::regex edge_line("^\\s*(" + id + R"()\s*->\s*()" + id + R"()\s*\[label=()" + id + R"()\];\s*$)");
    static const std::regex ignored(R"(^\s*(digraph\b.*\{|\}|rankdir=.*|node\s*\[.*|)\s*$)");

    std::optional<Nfa> nfa;
    std::istringstream in{std::string(text)};
    std::string line;
    std::smatch m;
    std::size_t lineno = 0;
    auto need = [&]() -> Nfa& {
        if (!nfa) { throw ParseError("DOT document lacks the alphabet comment before line " + std::to_string(lineno)); }
        return *nfa;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (std::regex_match(line, m, alphabet_line)) {
            std::istringstream symbols(m[1].str());
            std::vector<Symbol> names;
            for (std::string s; symbols >> s;) { names.push_back(s); }
            nfa.emplace(Alphabet(std::move(names)));
        } else if (std::regex_match(line, marker_line)) {
            continue;
        } else if (std::regex_match(line, m, node_line)) {
            Nfa& a = need();
            State q = a.add_state(unquote(m[1].str()));
            a.set_accepting(q, m[2].matched);
        } else if (std::regex_match(line, m, entry_line)) {
            Nfa& a = need();
            a.set_initial(state_ref(a, unquote(m[2].str())));
        } else if (std::regex_match(line, m, edge_line)) {
            Nfa& a = need();
            State from = state_ref(a, unquote(m[1].str()));
            State to = state_ref(a, unquote(m[2].str()));
            std::string label = unquote(m[3].str());
            std::size_t start = 0;
            while (start <= label.size()) {
                std::size_t comma = label.find(',', start);
                if (comma == std::string::npos) { comma = label.size(); }
                std::string symbol = label.substr(start, comma - start);
                auto sid = a.alphabet().find(symbol);
                if (!sid) { throw ParseError("unknown symbol '" + symbol + "' on line " + std::to_string(lineno)); }
                a.add_transition(from, *sid, to);
                start = comma + 1;
            }
        } else if (!std::regex_match(line, ignored)) {
            throw ParseError("unsupported DOT line " + std::to_string(lineno) + ": " + line);
        }
    }
    if (!nfa) { throw ParseError("DOT document lacks the alphabet comment"); }
    return std::move(*nfa);
}

Json tower_to_json(const Tower& tower) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < tower.words.size(); ++i) {
        arr.push_back({{"word", format_word(tower.words[i])}, {"side", to_string(tower.sides[i])}});
    }
    return arr;
}

Tower tower_from_json(const Json& doc, const Alphabet& alphabet) {
    if (!doc.is_array()) { throw ParseError("tower must be a JSON array"); }
    Tower tower;
    for (const Json& item : doc) {
        require_fields(item, {"word", "side"}, "tower entry");
        if (!item["word"].is_string() || !item["side"].is_string()) { throw ParseError("tower fields must be strings"); }
        std::string side = item["side"].get<std::string>();
        if (side != "first" && side != "second") { throw ParseError("side must be 'first' or 'second'"); }
        tower.words.push_back(parse_word(item["word"].get<std::string>(), alphabet));
        tower.sides.push_back(side == "first" ? Side::first : Side::second);
    }
    return tower;
}

Json pieces_to_json(const PieceSet& pieces) {
    Json arr = Json::array();
    for (const Word& w : pieces) { arr.push_back(format_word(w)); }
    return arr;
}

Json chain_report(const ChainTrace& trace) {
    Json doc;
    if (trace.separable()) {
        doc["verdict"] = "separable";
        doc["B"] = std::get<Separable>(trace.verdict).bound;
    } else if (trace.infinite()) {
        doc["verdict"] = "infinite-tower";
    } else {
        doc["verdict"] = "exhausted";
        doc["limit"] = std::get<Exhausted>(trace.verdict).limit;
    }
    Json levels = Json::array();
    for (std::size_t k = 0; k < trace.levels.size(); ++k) {
        levels.push_back({{"k", k},
                          {"first_states", trace.levels[k].first.num_states()},
                          {"second_states", trace.levels[k].second.num_states()}});
    }
    doc["levels"] = levels;
    return doc;
}

std::string chain_report_text(const ChainTrace& trace) {
    std::ostringstream out;
    out << std::setw(6) << "level" << std::setw(14) << "first" << std::setw(14) << "second" << '\n';
    for (std::size_t k = 0; k < trace.levels.size(); ++k) {
        out << std::setw(6) << k << std::setw(14) << trace.levels[k].first.num_states() << std::setw(14)
            << trace.levels[k].second.num_states() << '\n';
    }
    if (trace.separable()) {
        out << "verdict: separable, B = " << std::get<Separable>(trace.verdict).bound << '\n';
    } else if (trace.infinite()) {
        out << "verdict: infinite tower\n";
    } else {
        out << "verdict: undecided after " << std::get<Exhausted>(trace.verdict).limit << " levels\n";
    }
    return out.str();
}

Json separator_to_json(const SeparatorResult& result) {
    Json doc;
    doc["separator"] = automaton_to_json(result.separator);
    Json levels = Json::array();
    for (const Nfa& level : result.levels) { levels.push_back(automaton_to_json(level)); }
    doc["levels"] = levels;
    return doc;
}

std::string to_string(const Natural& value) { return value.str(); }

Json factorization_to_json(const CyclicFactorization& factorization, const Nfa& nfa) {
    WeightReport weight = factorization_weight(factorization);
    Json factors = Json::array();
    for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
        const Factor& f = factorization.factors[i];
        factors.push_back({{"kind", f.kind == FactorKind::letter ? "letter" : "cycle"},
                           {"word", format_word(f.word)},
                           {"from", nfa.state_name(f.from_state)},
                           {"to", nfa.state_name(f.to_state)},
                           {"anchor", nfa.state_name(f.anchor_state)},
                           {"weight", to_string(weight.per_factor[i])}});
    }
    return {{"word", format_word(factorization.subject)},
            {"n", factorization.automaton_states},
            {"factors", factors},
            {"W", to_string(weight.total)}};
}

Json audit_to_json(const TowerAudit& audit) {
    Json levels = Json::array();
    for (const AuditLevel& level : audit.levels) {
        const Nfa& nfa = level.side == Side::first ? audit.first : audit.second;
        Json entry = factorization_to_json(level.factorization, nfa);
        entry["side"] = to_string(level.side);
        levels.push_back(std::move(entry));
    }
    return {{"n", audit.states},
            {"m", audit.alphabet_size},
            {"g_m", to_string(audit.top_bound)},
            {"violation", audit.violation},
            {"exceeds_top_bound", audit.exceeds_top_bound},
            {"levels", levels}};
}

std::string audit_table(const TowerAudit& audit) {
    std::ostringstream out;
    out << std::setw(6) << "i" << std::setw(8) << "side" << std::setw(10) << "|w_i|" << std::setw(10) << "letters"
        << std::setw(10) << "cycles" << std::setw(16) << "W_i" << '\n';
    for (std::size_t i = 0; i < audit.levels.size(); ++i) {
        const AuditLevel& level = audit.levels[i];
        out << std::setw(6) << i + 1 << std::setw(8) << to_string(level.side) << std::setw(10) << level.word.size()
            << std::setw(10) << level.factorization.count(FactorKind::letter) << std::setw(10)
            << level.factorization.count(FactorKind::cycle) << std::setw(16) << to_string(level.weight.total) << '\n';
    }
    out << "n = " << audit.states << ", m = " << audit.alphabet_size << ", g(m) = " << to_string(audit.top_bound)
        << '\n';
    out << "strictly increasing: " << (audit.violation ? "no" : "yes") << '\n';
    return out.str();
}

} // namespace ptsep::io
