// Command line front end. Each subcommand wraps one library operation:
// JSON documents in, aligned tables out, or one deterministic JSON report
// with --json. Exit codes: 0 ok, 1 bad input, 2 failed mathematical
// precondition, 3 internal invariant or failed self-check, 64 usage.

#include <cctype>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "linkgenus/document.hpp"
#include "linkgenus/tate.hpp"
#include "linkgenus/verify.hpp"

namespace lg = linkgenus;
using lg::Int;

namespace {

Int parse_int_arg(const std::string& s, const std::string& what) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = start < s.size();
    for (std::size_t i = start; ok && i < s.size(); ++i)
        ok = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
    if (!ok) throw lg::ValidationError(what + ": expected a decimal integer, got \"" + s + "\"");
    return Int(s);
}

using Table = std::vector<std::vector<std::string>>;

void print_table(std::ostream& os, const Table& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << line << '\n';
    }
}

std::string vec_str(const std::vector<Int>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += lg::to_string(xs[i]);
    }
    return s + ")";
}

std::string map_str(const std::map<std::string, Int>& m) {
    if (m.empty()) return "0";
    std::string s;
    for (const auto& [knot, v] : m) {
        if (!s.empty()) s += "  ";
        s += knot + ":" + lg::to_string(v);
    }
    return s;
}

// Success and error paths share this shape; JSON and table rendering both
// read from it, so the two formats cannot drift apart.
struct Report {
    std::string command;
    lg::JsonValue input = lg::JsonValue::object();
    std::vector<lg::KnotSplitting> splittings;
    lg::JsonValue result = lg::JsonValue::object();
    std::vector<std::string> warnings;
    std::string status = "ok";
    int exit_code = 0;

    std::vector<std::string> lines; // human rendering of the result
    Table result_table;
};

lg::JsonValue report_json(const Report& rep) {
    lg::JsonValue out = lg::JsonValue::object();
    out.set("command", rep.command);
    out.set("input", rep.input);
    lg::JsonValue sp = lg::JsonValue::array();
    for (const auto& s : rep.splittings) sp.push_back(lg::to_json(s));
    out.set("splittings", sp);
    out.set("result", rep.result);
    lg::JsonValue wa = lg::JsonValue::array();
    for (const auto& w : rep.warnings) wa.push_back(w);
    out.set("warnings", wa);
    out.set("status", rep.status);
    out.set("exit_code", rep.exit_code);
    return out;
}

void print_human(const Report& rep, std::ostream& os) {
    if (!rep.splittings.empty()) {
        Table t{{"knot", "mu", "lambda", "c", "d", "e", "t"}};
        for (const auto& s : rep.splittings)
            t.push_back({s.knot, lg::to_string(s.mu_char), lg::to_string(s.lambda_char),
                         lg::to_string(s.c), lg::to_string(s.d), lg::to_string(s.e),
                         lg::to_string(s.lattice.t)});
        print_table(os, t);
        os << '\n';
    }
    for (const auto& line : rep.lines) os << line << '\n';
    if (!rep.result_table.empty()) print_table(os, rep.result_table);
    for (const auto& w : rep.warnings) os << "warning: " << w << '\n';
}

struct Args {
    std::string input;
    std::string idele;
    std::string chain;
    std::vector<std::size_t> cycles;
    std::vector<std::string> target;
    std::string bound = "6";
    std::uint64_t seed = 1;
    std::string max_n = "12";
    std::size_t max_knots = 6;
    std::size_t trials = 16;
    std::string fail_inject;
    bool json = false;
};

// Loads the document, echoes the canonicalized input into the report, and
// fills the splitting table (with coupling warnings) when a cover is present.
lg::InputDocument load_doc(const Args& args, Report& rep, bool need_cover) {
    lg::InputDocument doc = lg::load_document(args.input);
    rep.input.set("path", args.input);
    rep.input.set("window", lg::to_json(doc.window));
    if (doc.has_cover) rep.input.set("cover", lg::to_json(doc.cover));
    if (!doc.cycles.empty()) {
        lg::JsonValue cs = lg::JsonValue::array();
        for (const auto& z : doc.cycles) cs.push_back(lg::to_json(z));
        rep.input.set("cycles", cs);
    }
    if (need_cover && !doc.has_cover)
        throw lg::ValidationError(rep.command + " needs a \"cover\" in the document");
    if (doc.has_cover) {
        rep.splittings = lg::all_splittings(doc.window, doc.cover);
        for (const auto& s : rep.splittings)
            if (s.nondiagonal_norm())
                rep.warnings.push_back("knot " + s.knot + ": kernel lattice couples the longitude into the meridian (t = " +
                                       lg::to_string(s.lattice.t) + "), the norm is not diagonal there");
    }
    return doc;
}

Table base_idele_table(const lg::BaseIdele& x) {
    Table t{{"knot", "l", "m"}};
    for (const auto& [knot, v] : x.support)
        t.push_back({knot, lg::to_string(v.lambda), lg::to_string(v.mu)});
    return t;
}

Table cover_idele_table(const lg::CoverIdele& x) {
    Table t{{"knot", "component", "l", "m"}};
    for (const auto& [knot, fiber] : x.support)
        for (std::size_t j = 0; j < fiber.size(); ++j)
            t.push_back({knot, std::to_string(j), lg::to_string(fiber[j].lambda),
                         lg::to_string(fiber[j].mu)});
    return t;
}

void run_cover_info(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    lg::FinAbGroup q = lg::reciprocity_quotient(doc.window, doc.cover);
    rep.result.set("n", doc.cover.n);
    rep.result.set("reciprocity_quotient", lg::to_json(q));
    rep.lines.push_back("cover degree: " + lg::to_string(doc.cover.n) + ", branch knots: " +
                        std::to_string(doc.cover.branch_count()) + " of " +
                        std::to_string(doc.window.size()));
    rep.lines.push_back("reciprocity quotient: " + lg::to_string(q));
    if (!(q == lg::FinAbGroup::cyclic(doc.cover.n)))
        rep.warnings.push_back("reciprocity quotient is " + lg::to_string(q) + ", not Z/" +
                               lg::to_string(doc.cover.n) +
                               "; the window is too small to see full reciprocity");
}

void run_delta(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, false);
    lg::Chain2 chain = lg::parse_chain(lg::load_json_file(args.chain), doc.window);
    rep.input.set("chain", lg::to_json(chain));
    lg::BaseIdele x = lg::delta(doc.window, chain);
    rep.result.set("idele", lg::to_json(x));
    rep.lines.push_back("boundary of " + map_str(chain.coeffs) + ":");
    rep.result_table = base_idele_table(x);
}

void run_decompose(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, false);
    lg::BaseIdele x = lg::parse_base_idele(lg::load_json_file(args.idele), doc.window);
    rep.input.set("idele", lg::to_json(x));
    lg::Decomposition dec = lg::decompose(doc.window, x);
    rep.result.set("chain", lg::to_json(dec.chain));
    rep.result.set("unit", lg::to_json(dec.unit));
    rep.lines.push_back("principal part: " + map_str(dec.chain.coeffs));
    rep.lines.push_back("unit part:      " + map_str(dec.unit.mu));
}

void run_norm(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    lg::CoverIdele x = lg::parse_cover_idele(lg::load_json_file(args.idele), doc.window);
    rep.input.set("idele", lg::to_json(x));
    lg::BaseIdele y = lg::norm(doc.window, doc.cover, x);
    rep.result.set("norm", lg::to_json(y));
    rep.lines.push_back("norm:");
    rep.result_table = base_idele_table(y);
}

void run_satz90(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    lg::CoverIdele a = lg::parse_cover_idele(lg::load_json_file(args.idele), doc.window);
    rep.input.set("idele", lg::to_json(a));
    lg::CoverIdele b = lg::hilbert90_solve(doc.cover, a);
    rep.result.set("solution", lg::to_json(b));
    rep.lines.push_back("b with (tau - 1) b = a:");
    rep.result_table = cover_idele_table(b);
}

void run_tate(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    lg::JsonValue mods = lg::JsonValue::array();
    Table t{{"knot", "h0", "h1"}};
    for (const auto& knot : doc.window.knots()) {
        lg::CyclicModule m = lg::induced_module(doc.window, doc.cover, knot);
        lg::FinAbGroup h0 = lg::tate_h0(m);
        lg::FinAbGroup h1 = lg::tate_h1(m);
        lg::JsonValue row = lg::JsonValue::object();
        row.set("knot", knot);
        row.set("h0", lg::to_json(h0));
        row.set("h1", lg::to_json(h1));
        mods.push_back(row);
        t.push_back({knot, lg::to_string(h0), lg::to_string(h1)});
    }
    rep.result.set("modules", mods);
    rep.lines.push_back("Tate cohomology of the idele block over each knot:");
    rep.result_table = t;
}

void run_genus_number(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    Int g = lg::genus_number(doc.cover);
    rep.result.set("genus_number", g);
    rep.lines.push_back("genus number: " + lg::to_string(g));
}

void run_genus_image(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    std::vector<lg::GenusVector> classes = lg::genus_image(doc.cover);
    lg::JsonValue labels = lg::JsonValue::array();
    std::vector<Int> es;
    for (const auto& [knot, a] : doc.cover.branch) {
        labels.push_back(knot);
        es.push_back(lg::splitting_invariants(doc.window, doc.cover, knot).e);
    }
    lg::JsonValue cls = lg::JsonValue::array();
    for (const auto& v : classes) cls.push_back(lg::json_int_array(v));
    rep.result.set("branch", labels);
    rep.result.set("e", lg::json_int_array(es));
    rep.result.set("classes", cls);
    std::string mods;
    for (std::size_t i = 0; i < es.size(); ++i)
        mods += (i ? " x " : "") + ("Z/" + lg::to_string(es[i]));
    rep.lines.push_back("image of chi in " + (mods.empty() ? "0" : mods) + ", " +
                        std::to_string(classes.size()) + " classes:");
    for (const auto& v : classes) rep.lines.push_back("  " + vec_str(v));
}

std::vector<std::size_t> cycle_picks(const Args& args, const lg::InputDocument& doc) {
    if (doc.cycles.empty()) throw lg::ValidationError("document has no \"cycles\"");
    std::vector<std::size_t> picks = args.cycles;
    if (picks.empty())
        for (std::size_t i = 0; i < doc.cycles.size(); ++i) picks.push_back(i);
    for (std::size_t i : picks)
        if (i >= doc.cycles.size())
            throw lg::ValidationError("--cycle " + std::to_string(i) + " out of range, document has " +
                                      std::to_string(doc.cycles.size()));
    return picks;
}

void run_chi(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    lg::JsonValue vals = lg::JsonValue::array();
    Table t{{"cycle", "chi"}};
    for (std::size_t i : cycle_picks(args, doc)) {
        lg::GenusVector v = lg::chi(doc.window, doc.cover, doc.cycles[i]);
        lg::JsonValue row = lg::JsonValue::object();
        row.set("cycle", Int(i));
        row.set("chi", lg::json_int_array(v));
        vals.push_back(row);
        t.push_back({std::to_string(i), vec_str(v)});
    }
    rep.result.set("values", vals);
    rep.result_table = t;
}

void run_same_genus(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    std::vector<std::size_t> picks = cycle_picks(args, doc);
    if (picks.size() != 2)
        throw lg::ValidationError("same-genus compares exactly two cycles, pass --cycle twice");
    lg::GenusVector v0 = lg::chi(doc.window, doc.cover, doc.cycles[picks[0]]);
    lg::GenusVector v1 = lg::chi(doc.window, doc.cover, doc.cycles[picks[1]]);
    bool same = lg::same_genus(doc.window, doc.cover, doc.cycles[picks[0]], doc.cycles[picks[1]]);
    lg::JsonValue pair = lg::JsonValue::array();
    pair.push_back(Int(picks[0]));
    pair.push_back(Int(picks[1]));
    rep.result.set("cycles", pair);
    lg::JsonValue chis = lg::JsonValue::array();
    chis.push_back(lg::json_int_array(v0));
    chis.push_back(lg::json_int_array(v1));
    rep.result.set("chi", chis);
    rep.result.set("same", same);
    rep.lines.push_back("chi(cycle " + std::to_string(picks[0]) + ") = " + vec_str(v0));
    rep.lines.push_back("chi(cycle " + std::to_string(picks[1]) + ") = " + vec_str(v1));
    rep.lines.push_back(same ? "same genus" : "different genus");
}

void run_realize(const Args& args, Report& rep) {
    lg::InputDocument doc = load_doc(args, rep, true);
    std::vector<Int> target;
    for (const auto& s : args.target) target.push_back(parse_int_arg(s, "--target"));
    Int bound = parse_int_arg(args.bound, "--bound");
    rep.input.set("target", lg::json_int_array(target));
    rep.input.set("bound", bound);
    lg::RealizeResult res = lg::realize_class(doc.window, doc.cover, target, bound);
    rep.result.set("found", res.found);
    if (res.found) {
        rep.result.set("window", lg::to_json(res.window));
        rep.result.set("witness", lg::to_json(res.witness));
        rep.lines.push_back("realized " + vec_str(target) + " with " +
                            std::to_string(res.window.size() - doc.window.size()) +
                            " synthetic knots:");
        Table t{{"knot", "component", "coeff"}};
        for (const auto& term : res.witness.terms)
            t.push_back({term.knot, lg::to_string(term.component), lg::to_string(term.coeff)});
        rep.result_table = t;
    } else {
        lg::JsonValue gen = lg::JsonValue::array();
        for (const auto& v : res.generated) gen.push_back(lg::json_int_array(v));
        rep.result.set("generated", gen);
        rep.lines.push_back("not reached within coefficient mass " + lg::to_string(bound) + "; " +
                            std::to_string(res.generated.size()) + " classes generated");
    }
}

void run_verify(const Args& args, Report& rep) {
    lg::VerifyCaps caps;
    caps.seed = args.seed;
    caps.max_n = parse_int_arg(args.max_n, "--max-n");
    caps.max_knots = args.max_knots;
    caps.trials = args.trials;
    caps.fail_injected = args.fail_inject;
    rep.input.set("seed", Int(args.seed));
    rep.input.set("max_n", caps.max_n);
    rep.input.set("max_knots", Int(args.max_knots));
    rep.input.set("trials", Int(args.trials));
    if (!args.fail_inject.empty()) rep.input.set("fail_injected", args.fail_inject);
    lg::VerifyReport vr = lg::run_verify(caps);
    lg::JsonValue checks = lg::JsonValue::array();
    Table t{{"check", "status", "trials", "detail"}};
    std::size_t passed = 0;
    for (const auto& c : vr.checks) {
        lg::JsonValue row = lg::JsonValue::object();
        row.set("name", c.name);
        row.set("passed", c.passed);
        row.set("trials", Int(c.trials));
        row.set("detail", c.detail);
        checks.push_back(row);
        t.push_back({c.name, c.passed ? "pass" : "FAIL", std::to_string(c.trials), c.detail});
        if (c.passed) ++passed;
    }
    rep.result.set("checks", checks);
    rep.result.set("all_passed", vr.all_passed());
    rep.result_table = t;
    rep.lines.push_back(std::to_string(passed) + "/" + std::to_string(vr.checks.size()) +
                        " checks passed");
    if (!vr.all_passed()) {
        rep.status = "check-failure";
        rep.exit_code = 3;
    }
}

void fail(Report& rep, const std::string& status, int code, const std::string& message) {
    rep.status = status;
    rep.exit_code = code;
    rep.result = lg::JsonValue::object();
    rep.result.set("error", message);
    rep.lines.clear();
    rep.result_table.clear();
}

} // namespace

int main(int argc, char** argv) {
    Args args;
    CLI::App app{"exact idele and genus invariants of cyclic branched covers"};
    app.require_subcommand(1);

    std::map<std::string, std::function<void(const Args&, Report&)>> handlers;
    auto add = [&](const std::string& name, const std::string& desc, bool takes_doc,
                   void (*fn)(const Args&, Report&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_flag("--json", args.json, "emit the machine-readable report");
        if (takes_doc)
            sub->add_option("input", args.input, "window/cover document (JSON)")->required();
        handlers[name] = fn;
        return sub;
    };

    add("cover-info", "splitting invariants and reciprocity quotient", true, run_cover_info);
    add("idele-delta", "boundary idele of a 2-chain", true, run_delta)
        ->add_option("--chain", args.chain, "chain document, {\"coeffs\": {knot: coeff}}")
        ->required();
    add("idele-decompose", "split an idele into principal and unit parts", true, run_decompose)
        ->add_option("--idele", args.idele, "base idele document")
        ->required();
    add("idele-norm", "pushforward of a cover idele", true, run_norm)
        ->add_option("--idele", args.idele, "cover idele document")
        ->required();
    add("satz90", "solve (tau - 1) b = a for a norm-zero cover idele", true, run_satz90)
        ->add_option("--idele", args.idele, "cover idele document")
        ->required();
    add("tate", "Tate cohomology of every knot's idele block", true, run_tate);
    add("genus-number", "number of genera of the cover", true, run_genus_number);
    add("genus-image", "all genus classes, enumerated", true, run_genus_image);
    CLI::App* sub_chi = add("chi", "genus map on document cycles", true, run_chi);
    sub_chi->add_option("--cycle", args.cycles, "cycle index into the document (repeatable)");
    CLI::App* sub_same = add("same-genus", "compare two document cycles", true, run_same_genus);
    sub_same->add_option("--cycle", args.cycles, "cycle index into the document (twice)");
    CLI::App* sub_realize = add("realize", "find a cycle with a prescribed genus class", true, run_realize);
    sub_realize->add_option("--target", args.target, "target residue per branch knot (repeatable)")
        ->required();
    sub_realize->add_option("--bound", args.bound, "coefficient mass bound for the search");
    CLI::App* sub_verify = add("verify", "run the randomized identity battery", false, run_verify);
    sub_verify->add_option("--seed", args.seed, "generator seed");
    sub_verify->add_option("--max-n", args.max_n, "largest cover degree drawn");
    sub_verify->add_option("--max-knots", args.max_knots, "largest window drawn");
    sub_verify->add_option("--trials", args.trials, "instances per check");
    sub_verify->add_option("--fail-inject", args.fail_inject,
                           "force the named check to fail (reporting-path diagnostics)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    Report rep;
    rep.command = app.get_subcommands().front()->get_name();
    try {
        handlers.at(rep.command)(args, rep);
    } catch (const lg::ValidationError& e) {
        fail(rep, "validation-error", 1, e.what());
    } catch (const lg::PreconditionError& e) {
        fail(rep, "precondition-error", 2, e.what());
    } catch (const std::exception& e) {
        fail(rep, "internal-error", 3, e.what());
    }

    if (args.json) {
        std::cout << report_json(rep).dump(2) << '\n';
    } else {
        print_human(rep, std::cout);
        if (rep.exit_code != 0 && rep.status != "check-failure")
            std::cerr << "error (" << rep.status << "): " << rep.result.at("error").as_string()
                      << '\n';
    }
    return rep.exit_code;
}
