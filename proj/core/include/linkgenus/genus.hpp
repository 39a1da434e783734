#pragma once

#include "linkgenus/idele.hpp"

namespace linkgenus {

// 1-cycle upstairs, written as integer multiples of fiber components over
// knots that are not branch knots (cycles supported off the branch locus
// represent every class).
struct Cycle1 {
    struct Term {
        std::string knot;
        Int component; // fiber index in [0, c_K)
        Int coeff;
        bool operator==(const Term& o) const = default;
    };
    std::vector<Term> terms;

    static Cycle1 zero() { return {}; }
    bool operator==(const Cycle1& o) const = default;
};

// Residue vector in prod Z/e_i, indexed by the branch knots in cover order.
using GenusVector = std::vector<Int>;

// f_* of the cycle in the base: each component over K maps with degree d_K,
// so knot K receives d_K times the sum of its coefficients. Terms over branch
// knots or with out-of-range component indices are rejected.
std::map<std::string, Int> pushforward(const LinkWindow& w, const CoverSpec& cover,
                                       const Cycle1& z);

// The genus map: entry i is lk(f_* z, K_i) mod e_i.
GenusVector chi(const LinkWindow& w, const CoverSpec& cover, const Cycle1& z);

bool same_genus(const LinkWindow& w, const CoverSpec& cover, const Cycle1& z, const Cycle1& x);

// Character-weighted sum: sum a_i * x_i mod n. Vanishes exactly on the image
// of chi. (With the characters normalized so a_i generates its subgroup as
// n/e_i, the weight a_i literally equals n/e_i.)
Int sigma(const CoverSpec& cover, const GenusVector& x);

// All of ker(sigma), enumerated in mixed-radix order on prod Z/e_i; its size
// is prod(e_i)/n, the genus number. Desk-scale guard on prod(e_i).
std::vector<GenusVector> genus_image(const CoverSpec& cover);

// prod(e_i)/n; asserts integrality and agreement with |genus_image|.
Int genus_number(const CoverSpec& cover);

struct RealizeResult {
    bool found = false;
    // On success: a window extending the input by synthetic knots, and a
    // cycle over them with chi equal to the target.
    LinkWindow window;
    Cycle1 witness;
    // On exhaustion: what the bounded search actually generated.
    std::vector<GenusVector> generated;
};

// Finds a cycle with chi = target, preferring a single synthetic knot whose
// Frobenius is 0 (one component, coefficient 1), then single knots with
// nontrivial Frobenius, then combinations with total coefficient mass up to
// `bound`. Targets with sigma != 0 are rejected as provably unrealizable.
RealizeResult realize_class(const LinkWindow& w, const CoverSpec& cover,
                            const GenusVector& target, const Int& bound);

// Confirms chi(z) against the long way around: lift z to a cover idele,
// push forward with norm, split off the principal part, and read the genus
// vector from the unit part's meridian residues. Returns both routes.
struct DiagramCheck {
    GenusVector direct;
    GenusVector via_ideles;
    bool commutes = false;
};
DiagramCheck commuting_diagram_check(const LinkWindow& w, const CoverSpec& cover, const Cycle1& z);

} // namespace linkgenus
