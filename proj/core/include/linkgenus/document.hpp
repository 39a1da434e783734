#pragma once

#include "linkgenus/genus.hpp"
#include "linkgenus/json_value.hpp"

namespace linkgenus {

// Primary input document:
//   {
//     "window": {"knots": ["K1", "K2"], "lk": [[0, 1], [1, 0]]},
//     "cover":  {"n": 2, "branch": {"K1": 1}},
//     "cycles": [[{"knot": "K2", "component": 0, "coeff": 1}]]
//   }
// "cover" and "cycles" are optional; "component" defaults to 0 and "coeff"
// to 1. Unknown fields anywhere are rejected. The cover comes back
// canonicalized against the window.
struct InputDocument {
    LinkWindow window;
    CoverSpec cover;
    bool has_cover = false;
    std::vector<Cycle1> cycles;
};

InputDocument parse_document(const JsonValue& doc);
InputDocument load_document(const std::string& path);

// Whole file as exact JSON; unreadable files and malformed JSON are
// ValidationErrors.
JsonValue load_json_file(const std::string& path);

// Side documents for the idele commands.
//   base idele:  {"support": {"K1": {"l": 1, "m": 0}}}
//   cover idele: {"support": {"K1": [{"l": 0, "m": 1}, {"l": 2, "m": 0}]}}
//   chain:       {"coeffs": {"K1": 2}}
// Knot labels must exist in the window; fiber lengths are checked by the
// operations that care.
BaseIdele parse_base_idele(const JsonValue& doc, const LinkWindow& w);
CoverIdele parse_cover_idele(const JsonValue& doc, const LinkWindow& w);
Chain2 parse_chain(const JsonValue& doc, const LinkWindow& w);

JsonValue to_json(const LinkWindow& w);
JsonValue to_json(const CoverSpec& cover);
JsonValue to_json(const TorusClass& v); // {"l": .., "m": ..}
JsonValue to_json(const BaseIdele& x);
JsonValue to_json(const UnitIdele& u); // meridian coefficients by knot
JsonValue to_json(const Chain2& a);    // surface coefficients by knot
JsonValue to_json(const CoverIdele& x);
JsonValue to_json(const Cycle1& z);
JsonValue to_json(const KnotSplitting& s);
JsonValue to_json(const FinAbGroup& g);
JsonValue json_int_array(const std::vector<Int>& xs);

} // namespace linkgenus
