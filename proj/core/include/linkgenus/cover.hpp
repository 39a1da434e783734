#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkgenus/cyclic.hpp"
#include "linkgenus/link_window.hpp"

namespace linkgenus {

// Degree-n cyclic branched cover, presented by its branch locus L_0 and the
// covering character value a_K at each branch meridian. Branch entries are
// kept in a definite order (window order once validated against a window);
// genus vectors are indexed by that order.
struct CoverSpec {
    Int n = 1;
    std::vector<std::pair<std::string, Int>> branch; // (knot, a_K mod n)

    std::size_t branch_count() const { return branch.size(); }
    bool is_branch(const std::string& knot) const;
    // Character value a_K; throws ValidationError if knot is not in L_0.
    const Int& branch_value(const std::string& knot) const;
};

// CoverSpec invariants: n >= 1, every a_K nonzero mod n, branch labels
// distinct and contained in the window, and gcd({a_K} united {n}) = 1 (the
// total character is onto Z/n). Violations come back as messages.
std::vector<std::string> validate_cover(const LinkWindow& w, const CoverSpec& cover);

// Validates and reorders branch entries into window order (reduced mod n).
CoverSpec canonicalize_cover(const LinkWindow& w, const CoverSpec& cover);

// Restriction of the covering character to the boundary torus of `knot`:
// the meridian maps to a_K for branch knots and 0 otherwise; the longitude
// maps to the sum over other branch knots of lk(knot, K_j) * a_j mod n.
// Throws ValidationError if knot or a branch knot is missing from the window.
std::pair<Int, Int> extend_character(const LinkWindow& w, const CoverSpec& cover,
                                     const std::string& knot);

// How the fiber over one knot splits: c components, each covering the base
// knot with degree d and branching index e, c*d*e = n. The kernel lattice of
// the torus character is carried along; a nonzero t couples the longitude to
// the meridian under the norm (flagged, since the diagonal norm formula is
// exact only when t = 0).
struct KnotSplitting {
    std::string knot;
    Int mu_char;
    Int lambda_char;
    Int c, d, e;
    TorusLattice lattice;

    TorusClass beta_mu() const { return lattice.beta_mu(); }
    TorusClass beta_lambda() const { return lattice.beta_lambda(); }
    bool nondiagonal_norm() const { return lattice.t != 0; }
};

KnotSplitting splitting_invariants(const LinkWindow& w, const CoverSpec& cover,
                                   const std::string& knot);

// splitting_invariants for every window knot, in window order.
std::vector<KnotSplitting> all_splittings(const LinkWindow& w, const CoverSpec& cover);

} // namespace linkgenus
