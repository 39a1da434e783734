#include "linkgenus/document.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace linkgenus {

namespace {

void reject_unknown(const JsonValue& obj, const char* what,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.members()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ValidationError(std::string(what) + ": unknown field \"" + key + "\"");
    }
}

void require_in_window(const LinkWindow& w, const std::string& knot, const char* what) {
    if (!w.has(knot))
        throw ValidationError(std::string(what) + ": unknown knot label \"" + knot + "\"");
}

LinkWindow parse_window(const JsonValue& doc) {
    reject_unknown(doc, "window", {"knots", "lk"});
    std::vector<std::string> knots;
    for (const JsonValue& k : doc.at("knots").items()) knots.push_back(k.as_string());
    const auto& rows = doc.at("lk").items();
    std::size_t dim = knots.size();
    IntMatrix lk(dim, dim);
    if (rows.size() != dim)
        throw ValidationError("window: lk has " + std::to_string(rows.size()) +
                              " rows for " + std::to_string(dim) + " knots");
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = rows[i].items();
        if (row.size() != dim)
            throw ValidationError("window: lk row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(dim));
        for (std::size_t j = 0; j < dim; ++j) lk.at(i, j) = row[j].as_int();
    }
    WindowValidation checked = validate_window(knots, lk);
    if (!checked.ok()) {
        std::string msg = "window:";
        for (const auto& v : checked.violations) msg += " " + v.message + ";";
        msg.pop_back();
        throw ValidationError(msg);
    }
    return *checked.window;
}

CoverSpec parse_cover(const JsonValue& doc, const LinkWindow& w) {
    reject_unknown(doc, "cover", {"n", "branch"});
    CoverSpec cover;
    cover.n = doc.at("n").as_int();
    if (const JsonValue* branch = doc.find("branch"))
        for (const auto& [knot, a] : branch->members())
            cover.branch.emplace_back(knot, a.as_int());
    return canonicalize_cover(w, cover);
}

Cycle1 parse_cycle(const JsonValue& doc, const LinkWindow& w) {
    Cycle1 z;
    for (const JsonValue& term : doc.items()) {
        reject_unknown(term, "cycle term", {"knot", "component", "coeff"});
        Cycle1::Term t;
        t.knot = term.at("knot").as_string();
        require_in_window(w, t.knot, "cycle term");
        const JsonValue* comp = term.find("component");
        t.component = comp ? comp->as_int() : Int(0);
        const JsonValue* coeff = term.find("coeff");
        t.coeff = coeff ? coeff->as_int() : Int(1);
        z.terms.push_back(std::move(t));
    }
    return z;
}

TorusClass parse_torus_class(const JsonValue& doc) {
    reject_unknown(doc, "torus class", {"l", "m"});
    TorusClass v;
    if (const JsonValue* l = doc.find("l")) v.lambda = l->as_int();
    if (const JsonValue* m = doc.find("m")) v.mu = m->as_int();
    return v;
}

} // namespace

InputDocument parse_document(const JsonValue& doc) {
    reject_unknown(doc, "document", {"window", "cover", "cycles"});
    InputDocument out{parse_window(doc.at("window")), {}, false, {}};
    if (const JsonValue* cover = doc.find("cover")) {
        out.cover = parse_cover(*cover, out.window);
        out.has_cover = true;
    }
    if (const JsonValue* cycles = doc.find("cycles"))
        for (const JsonValue& z : cycles->items())
            out.cycles.push_back(parse_cycle(z, out.window));
    return out;
}

InputDocument load_document(const std::string& path) {
    return parse_document(load_json_file(path));
}

JsonValue load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return JsonValue::parse(buf.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

BaseIdele parse_base_idele(const JsonValue& doc, const LinkWindow& w) {
    reject_unknown(doc, "idele", {"support"});
    BaseIdele x;
    for (const auto& [knot, v] : doc.at("support").members()) {
        require_in_window(w, knot, "idele");
        x.set(knot, parse_torus_class(v));
    }
    return x;
}

CoverIdele parse_cover_idele(const JsonValue& doc, const LinkWindow& w) {
    reject_unknown(doc, "cover idele", {"support"});
    CoverIdele x;
    for (const auto& [knot, fiber] : doc.at("support").members()) {
        require_in_window(w, knot, "cover idele");
        std::vector<TorusClass> parts;
        for (const JsonValue& v : fiber.items()) parts.push_back(parse_torus_class(v));
        x.support[knot] = std::move(parts);
    }
    return x;
}

Chain2 parse_chain(const JsonValue& doc, const LinkWindow& w) {
    reject_unknown(doc, "chain", {"coeffs"});
    Chain2 a;
    for (const auto& [knot, c] : doc.at("coeffs").members()) {
        require_in_window(w, knot, "chain");
        if (c.as_int() != 0) a.coeffs[knot] = c.as_int();
    }
    return a;
}

JsonValue to_json(const LinkWindow& w) {
    JsonValue knots = JsonValue::array();
    for (const auto& k : w.knots()) knots.push_back(k);
    JsonValue lk = JsonValue::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
        JsonValue row = JsonValue::array();
        for (std::size_t j = 0; j < w.size(); ++j)
            row.push_back(w.lk(w.knots()[i], w.knots()[j]));
        lk.push_back(std::move(row));
    }
    JsonValue out = JsonValue::object();
    out.set("knots", std::move(knots));
    out.set("lk", std::move(lk));
    return out;
}

JsonValue to_json(const CoverSpec& cover) {
    JsonValue branch = JsonValue::object();
    for (const auto& [knot, a] : cover.branch) branch.set(knot, a);
    JsonValue out = JsonValue::object();
    out.set("n", cover.n);
    out.set("branch", std::move(branch));
    return out;
}

JsonValue to_json(const TorusClass& v) {
    JsonValue out = JsonValue::object();
    out.set("l", v.lambda);
    out.set("m", v.mu);
    return out;
}

JsonValue to_json(const BaseIdele& x) {
    JsonValue support = JsonValue::object();
    for (const auto& [knot, v] : x.support) support.set(knot, to_json(v));
    JsonValue out = JsonValue::object();
    out.set("support", std::move(support));
    return out;
}

JsonValue to_json(const UnitIdele& u) {
    JsonValue out = JsonValue::object();
    for (const auto& [knot, m] : u.mu) out.set(knot, m);
    return out;
}

JsonValue to_json(const Chain2& a) {
    JsonValue out = JsonValue::object();
    for (const auto& [knot, c] : a.coeffs) out.set(knot, c);
    return out;
}

JsonValue to_json(const CoverIdele& x) {
    JsonValue support = JsonValue::object();
    for (const auto& [knot, fiber] : x.support) {
        JsonValue parts = JsonValue::array();
        for (const TorusClass& v : fiber) parts.push_back(to_json(v));
        support.set(knot, std::move(parts));
    }
    JsonValue out = JsonValue::object();
    out.set("support", std::move(support));
    return out;
}

JsonValue to_json(const Cycle1& z) {
    JsonValue out = JsonValue::array();
    for (const auto& t : z.terms) {
        JsonValue term = JsonValue::object();
        term.set("knot", t.knot);
        term.set("component", t.component);
        term.set("coeff", t.coeff);
        out.push_back(std::move(term));
    }
    return out;
}

JsonValue to_json(const KnotSplitting& s) {
    JsonValue out = JsonValue::object();
    out.set("knot", s.knot);
    out.set("mu_char", s.mu_char);
    out.set("lambda_char", s.lambda_char);
    out.set("c", s.c);
    out.set("d", s.d);
    out.set("e", s.e);
    out.set("t", s.lattice.t);
    return out;
}

JsonValue to_json(const FinAbGroup& g) {
    JsonValue out = JsonValue::object();
    out.set("free_rank", Int(g.free_rank));
    out.set("invariant_factors", json_int_array(g.invariant_factors));
    out.set("display", to_string(g));
    return out;
}

JsonValue json_int_array(const std::vector<Int>& xs) {
    JsonValue out = JsonValue::array();
    for (const Int& x : xs) out.push_back(x);
    return out;
}

} // namespace linkgenus
