/* io.hh -- JSON and DOT documents for automata, towers and reports.
 *
 * Automaton document:
 *
 *   { "alphabet": ["a","b"], "states": ["1","2"], "initial": ["1"], "accepting": ["2"],
 *     "transitions": [ {"from":"1","symbol":"a","to":"2"} ] }
 *
 * Unknown fields are rejected. On output, states follow the automaton's state order and
 * transitions are sorted by (from, symbol, to) in that order.
 */

#ifndef PTSEP_IO_HH_
#define PTSEP_IO_HH_

#include <string>
#include <string_view>

#include "json.hpp"

#include "ptsep/bounds.hh"
#include "ptsep/chain.hh"
#include "ptsep/separator.hh"

namespace ptsep::io {

using Json = nlohmann::ordered_json;

Json automaton_to_json(const Nfa& nfa);
/// Throws ParseError.
Nfa automaton_from_json(const Json& doc);
Nfa automaton_from_json_text(std::string_view text);

/**
 * Graphviz rendering: one node per state, doubled circle for accepting states, an arrow-less
 * point marker for each initial state, one edge per state pair labelled with its symbols joined
 * by commas. The alphabet is kept in a leading comment so the document can be read back.
 */
std::string automaton_to_dot(const Nfa& nfa);
/// Reads the DOT subset produced by automaton_to_dot. Throws ParseError.
Nfa automaton_from_dot(std::string_view text);

/// JSON array of {"word": ..., "side": "first"|"second"}.
Json tower_to_json(const Tower& tower);
Tower tower_from_json(const Json& doc, const Alphabet& alphabet);

Json pieces_to_json(const PieceSet& pieces);

/// Verdict, B and per-level state counts.
Json chain_report(const ChainTrace& trace);
std::string chain_report_text(const ChainTrace& trace);

/// The separator automaton document plus one document per level.
Json separator_to_json(const SeparatorResult& result);

Json factorization_to_json(const CyclicFactorization& factorization, const Nfa& nfa);
Json audit_to_json(const TowerAudit& audit);
std::string audit_table(const TowerAudit& audit);

std::string to_string(const Natural& value);

} // namespace ptsep::io

#endif // PTSEP_IO_HH_
