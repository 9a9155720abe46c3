#include "ptsep/cli.hh"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "ptsep/bounds.hh"
#include "ptsep/error.hh"
#include "ptsep/families.hh"
#include "ptsep/io.hh"
#include "ptsep/oracle.hh"
#include "ptsep/separator.hh"

namespace ptsep::cli {

namespace {

struct Inputs {
    std::vector<std::string> files;
    std::string family;
    unsigned param = 0;
};

struct Common {
    std::string output;
    std::string format = "json";
    std::string report;
    std::size_t max_levels = 4096;
    std::size_t state_budget = 1'000'000;
    std::size_t oracle_bound = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw ParseError("cannot open '" + path + "'"); }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Nfa read_automaton(const std::string& path) {
    std::string text = read_file(path);
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') { return io::automaton_from_json_text(text); }
    return io::automaton_from_dot(text);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) { throw ParseError("cannot write '" + path + "'"); }
    file << text;
}

std::string dump(const io::Json& doc) { return doc.dump(2) + "\n"; }

std::optional<FamilySpec> family_of(const Inputs& in) {
    if (in.family.empty()) { return std::nullopt; }
    return FamilySpec{parse_family_kind(in.family), in.param};
}

std::pair<Nfa, Nfa> load_pair(const Inputs& in) {
    if (auto spec = family_of(in)) {
        if (!in.files.empty()) { throw InvalidParameter("give either two automaton files or --family, not both"); }
        return build_family(*spec);
    }
    if (in.files.size() != 2) { throw InvalidParameter("expected two automaton files or --family KIND --param N"); }
    return {read_automaton(in.files[0]), read_automaton(in.files[1])};
}

ChainOptions chain_options(const Common& c) {
    ChainOptions o;
    o.max_levels = c.max_levels;
    o.limits.state_budget = c.state_budget;
    return o;
}

void add_inputs(CLI::App* cmd, Inputs& in) {
    cmd->add_option("automata", in.files, "first and second automaton (JSON or DOT)")->expected(0, 2);
    cmd->add_option("--family", in.family, "built-in family: quadratic, cubic or exponential");
    cmd->add_option("--param", in.param, "family parameter (n, or m for exponential)");
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("-o,--output", c.output, "output file (default: standard output)");
    cmd->add_option("--max-levels", c.max_levels, "chain level budget")->check(CLI::PositiveNumber);
    cmd->add_option("--state-budget", c.state_budget, "subset construction state budget")->check(CLI::PositiveNumber);
    cmd->add_option("--report", c.report, "print a human-readable summary")->check(CLI::IsMember({"text"}));
}

int cmd_decide(const Inputs& in, const Common& c, std::ostream& out) {
    auto [first, second] = load_pair(in);
    ChainTrace trace = run_chain(first, second, chain_options(c));
    if (!c.output.empty()) { write_output(c.output, dump(io::chain_report(trace)), out); }
    if (trace.exhausted()) {
        out << "undecided (chain exhausted " << c.max_levels << " levels)\n";
        if (c.report == "text") { out << io::chain_report_text(trace); }
        return undecided;
    }
    out << (trace.separable() ? "separable" : "not separable (infinite tower)") << "\n";
    if (c.report == "text") { out << io::chain_report_text(trace); }
    return trace.separable() ? success : negative;
}

int cmd_towerlen(const Inputs& in, const Common& c, std::ostream& out) {
    auto [first, second] = load_pair(in);
    TowerLength length = max_tower_length(first, second, chain_options(c));
    out << length.to_string() << "\n";
    if (c.oracle_bound > 0) {
        auto a = enumerate_language(first, c.oracle_bound);
        auto b = enumerate_language(second, c.oracle_bound);
        OracleTower o = oracle_max_tower(a, b);
        out << "oracle(" << c.oracle_bound << "): " << o.length << (o.shared_word ? " (shared word)" : "") << "\n";
    }
    if (c.report == "text" && !length.is_infinite()) {
        Alphabet sigma = unite(first.alphabet(), second.alphabet());
        std::size_t n = std::max<std::size_t>({trim(first).num_states(), trim(second).num_states(), 1});
        out << "upper bound (n = " << n << ", m = " << sigma.size() << "): "
            << io::to_string(upper_bound(n, sigma.size())) << "\n";
    }
    return success;
}

int cmd_witness(const Inputs& in, const Common& c, const std::string& word_text, bool family_witness,
                std::ostream& out) {
    auto [first, second] = load_pair(in);
    Tower tower;
    if (family_witness) {
        auto spec = family_of(in);
        if (!spec) { throw InvalidParameter("--family-witness requires --family"); }
        tower = witness_tower(*spec);
    } else if (!word_text.empty()) {
        Word word = parse_word(word_text, unite(first.alphabet(), second.alphabet()));
        tower = longest_prefix_tower(word, first, second);
    } else {
        tower = extract_tower(first, second, chain_options(c));
    }
    write_output(c.output, dump(io::tower_to_json(tower)), out);
    if (c.report == "text") { out << "tower length: " << tower.length() << "\n"; }
    return success;
}

int cmd_separator(const Inputs& in, const Common& c, bool with_pieces, std::ostream& out) {
    auto [first, second] = load_pair(in);
    SeparatorResult result = synthesize(first, second, chain_options(c));
    bool ok = verify_separator(result.separator, first, second, chain_options(c).limits);
    io::Json doc = io::separator_to_json(result);
    if (with_pieces) {
        io::Json pieces = io::Json::array();
        for (std::size_t k = 1; k <= result.levels.size(); ++k) {
            LevelPieces p = level_pieces(result, k, chain_options(c).limits);
            pieces.push_back({{"k", k}, {"keep", io::pieces_to_json(p.keep)}, {"drop", io::pieces_to_json(p.drop)}});
        }
        doc["pieces"] = pieces;
    }
    doc["verified"] = ok;
    write_output(c.output, dump(doc), out);
    if (c.report == "text") {
        out << io::chain_report_text(result.chain);
        out << "separator states: " << result.separator.num_states() << ", verified: " << (ok ? "yes" : "no") << "\n";
    }
    return ok ? success : negative;
}

int cmd_family(const std::string& kind, unsigned param, bool witness, const Common& c, std::ostream& out) {
    FamilySpec spec{parse_family_kind(kind), param};
    if (witness) {
        Tower tower = witness_tower(spec);
        io::Json doc = {{"word", format_word(witness_word(spec))}, {"tower", io::tower_to_json(tower)}};
        write_output(c.output, dump(doc), out);
        return success;
    }
    auto [first, second] = build_family(spec);
    if (c.format == "dot") {
        write_output(c.output, io::automaton_to_dot(first) + io::automaton_to_dot(second), out);
    } else {
        io::Json doc = {{"first", io::automaton_to_json(first)}, {"second", io::automaton_to_json(second)}};
        write_output(c.output, dump(doc), out);
    }
    return success;
}

int cmd_audit(const Inputs& in, const Common& c, const std::string& tower_path, std::ostream& out) {
    auto [first, second] = load_pair(in);
    Tower tower;
    if (!tower_path.empty()) {
        tower = io::tower_from_json(io::Json::parse(read_file(tower_path)), unite(first.alphabet(), second.alphabet()));
    } else if (auto spec = family_of(in)) {
        tower = witness_tower(*spec);
    } else {
        tower = extract_tower(first, second, chain_options(c));
    }
    TowerAudit audit = audit_tower_weights(tower, first, second);
    Natural bound = upper_bound(audit.states, audit.alphabet_size);
    bool within = Natural(tower.length()) <= bound;
    if (c.format == "text" || c.report == "text") {
        std::string table = io::audit_table(audit);
        table += "tower length " + std::to_string(tower.length()) + " <= upper bound " + io::to_string(bound) + ": " +
                 (within ? "yes" : "no") + "\n";
        write_output(c.output, table, out);
    } else {
        io::Json doc = io::audit_to_json(audit);
        doc["tower_length"] = tower.length();
        doc["upper_bound"] = io::to_string(bound);
        doc["within_bound"] = within;
        write_output(c.output, dump(doc), out);
    }
    return (!audit.violation && within) ? success : negative;
}

int cmd_convert(const std::string& input, const Common& c, std::ostream& out) {
    std::string text = read_file(input);
    auto start = text.find_first_not_of(" \t\r\n");
    bool is_json = start != std::string::npos && text[start] == '{';
    Nfa nfa = canonicalize(is_json ? io::automaton_from_json_text(text) : io::automaton_from_dot(text));
    std::string format = c.format.empty() ? (is_json ? "dot" : "json") : c.format;
    write_output(c.output, format == "dot" ? io::automaton_to_dot(nfa) : dump(io::automaton_to_json(nfa)), out);
    return success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Piecewise testable separability, tower lengths and separators for NFA pairs", "ptsep"};
    app.require_subcommand(1);

    Inputs inputs;
    Common common;
    std::string word_text;
    bool family_witness = false;
    bool with_pieces = false;
    std::string tower_path;
    std::string family_kind;
    unsigned family_param = 0;
    bool family_emit_witness = false;
    std::string convert_input;

    auto* decide = app.add_subcommand("decide", "decide separability and write the chain report");
    add_inputs(decide, inputs);
    add_common(decide, common);

    auto* towerlen = app.add_subcommand("towerlen", "print the exact maximal tower length");
    add_inputs(towerlen, inputs);
    add_common(towerlen, common);
    towerlen->add_option("--oracle-bound", common.oracle_bound)->group("");

    auto* witness = app.add_subcommand("witness", "write a tower as JSON");
    add_inputs(witness, inputs);
    add_common(witness, common);
    witness->add_option("--word", word_text, "longest tower of prefixes of this word");
    witness->add_flag("--family-witness", family_witness, "prefix tower of the family's witness word");

    auto* separator = app.add_subcommand("separator", "synthesize and verify a piecewise testable separator");
    add_inputs(separator, inputs);
    add_common(separator, common);
    separator->add_flag("--pieces", with_pieces, "include the minimal words of every level");

    auto* family = app.add_subcommand("family", "emit a built-in automata family");
    family->add_option("kind", family_kind, "quadratic, cubic or exponential")->required();
    family->add_option("param", family_param, "n, or m for exponential")->required();
    family->add_flag("--witness", family_emit_witness, "emit the witness word and its prefix tower");
    family->add_option("--format", common.format)->check(CLI::IsMember({"json", "dot"}));
    family->add_option("-o,--output", common.output, "output file");

    auto* audit = app.add_subcommand("audit", "audit factorization weights along a tower");
    add_inputs(audit, inputs);
    add_common(audit, common);
    audit->add_option("--tower", tower_path, "tower JSON (default: family witness or extracted tower)");
    audit->add_option("--format", common.format)->check(CLI::IsMember({"json", "text"}));

    auto* convert = app.add_subcommand("convert", "convert an automaton between JSON and DOT");
    convert->add_option("input", convert_input, "automaton file")->required();
    convert->add_option("--format", common.format, "target format (default: the other one)")
        ->check(CLI::IsMember({"json", "dot"}));
    convert->add_option("-o,--output", common.output, "output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? success : input_error;
    }

    try {
        if (*decide) { return cmd_decide(inputs, common, out); }
        if (*towerlen) { return cmd_towerlen(inputs, common, out); }
        if (*witness) { return cmd_witness(inputs, common, word_text, family_witness, out); }
        if (*separator) { return cmd_separator(inputs, common, with_pieces, out); }
        if (*family) { return cmd_family(family_kind, family_param, family_emit_witness, common, out); }
        if (*audit) { return cmd_audit(inputs, common, tower_path, out); }
        if (*convert) {
            if (convert->count("--format") == 0) { common.format.clear(); }
            return cmd_convert(convert_input, common, out);
        }
    } catch (const NotSeparable& e) {
        err << "not separable: " << e.what() << "\n";
        return negative;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return resource_limit;
    } catch (const Undecided& e) {
        err << "undecided: " << e.what() << "\n";
        return undecided;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace ptsep::cli
