#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkgenus/cover.hpp"
#include "linkgenus/fin_ab_group.hpp"

namespace linkgenus {

// Finitely supported element of the base idele group: at each knot a class
// l*[longitude] + m*[meridian] on the boundary torus. Zero entries are never
// stored, so map equality is group equality.
struct BaseIdele {
    std::map<std::string, TorusClass> support;

    static BaseIdele zero() { return {}; }
    bool is_zero() const { return support.empty(); }
    TorusClass at(const std::string& knot) const;
    void set(const std::string& knot, TorusClass v); // drops (0,0)

    BaseIdele operator+(const BaseIdele& o) const;
    BaseIdele operator-(const BaseIdele& o) const;
    BaseIdele operator-() const;
    bool operator==(const BaseIdele& o) const = default;
};

// Meridian-only idele (trivial longitude part everywhere).
struct UnitIdele {
    std::map<std::string, Int> mu;

    BaseIdele as_idele() const;
    bool is_zero() const { return mu.empty(); }
    Int at(const std::string& knot) const;
    bool operator==(const UnitIdele& o) const = default;
};

// 2-chain spanned by the Seifert surfaces S_K, one per knot.
struct Chain2 {
    std::map<std::string, Int> coeffs;

    static Chain2 surface(const std::string& knot, Int coeff = 1);
    bool is_zero() const { return coeffs.empty(); }
    Int at(const std::string& knot) const;
    Chain2 operator+(const Chain2& o) const;
    bool operator==(const Chain2& o) const = default;
};

// Idele upstairs: at each knot a torus class per fiber component, indexed
// 0..c_K-1 along the deck orbit. Absent knots are zero on every component.
struct CoverIdele {
    std::map<std::string, std::vector<TorusClass>> support;

    bool operator==(const CoverIdele& o) const = default;
};

// Boundary of a 2-chain: delta(A) has longitude coefficient A_K at K and
// meridian coefficient -sum_{K' != K} lk(K, K') A_{K'} (the Seifert surface
// of K' punctures the tori of the knots it links). Support must lie in the
// window.
BaseIdele delta(const LinkWindow& w, const Chain2& a);

// The unique splitting x = delta(A) + u with A_K = l_K: over a homology
// sphere, principal and unit ideles meet trivially.
struct Decomposition {
    Chain2 chain;
    UnitIdele unit;
};
Decomposition decompose(const LinkWindow& w, const BaseIdele& x);

// Pushforward along the cover: per knot, with fiber sums L = sum l_j and
// M = sum m_j, the image is L*beta_lambda + M*beta_mu in the kernel lattice
// of that knot's torus character. Fiber vectors must have length c_K.
BaseIdele norm(const LinkWindow& w, const CoverSpec& cover, const CoverIdele& a);

// Deck transformation tau^k: fiber component j receives component j - k mod
// c_K; coordinates are carried unchanged.
CoverIdele deck_act(const CoverSpec& cover, const Int& k, const CoverIdele& a);

// Global reciprocity evaluation: sum over knots of l_K * lambda_char(K) +
// m_K * mu_char(K) mod n. Vanishes on boundaries and on norms.
Int artin_symbol(const LinkWindow& w, const CoverSpec& cover, const BaseIdele& x);

// H_1 of the complement of the sublink L, computed as the cokernel of the
// relator lattice spanned by all delta(S_K) and the meridians of knots
// outside L. Free of rank |L| over a homology sphere.
FinAbGroup window_homology(const LinkWindow& w, const std::vector<std::string>& sublink);

// Idele class group modulo norms: cokernel of the lattice spanned by all
// delta(S_K) plus, per knot, the two kernel-lattice basis vectors (the norm
// image at that knot). Isomorphic to Z/n when the window is rich enough;
// see enrich_for_reciprocity.
FinAbGroup reciprocity_quotient(const LinkWindow& w, const CoverSpec& cover);

// Adds synthetic knots whose linking vectors realize generators of the
// kernel of the branch-weighted symbol, which is exactly what a very large
// ambient link would provide; afterwards reciprocity_quotient is Z/n.
// Enumeration refuses covers with prod(e_i) beyond desk scale.
LinkWindow enrich_for_reciprocity(const LinkWindow& w, const CoverSpec& cover);

} // namespace linkgenus
