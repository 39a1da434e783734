#pragma once

#include "linkgenus/idele.hpp"
#include "linkgenus/smith.hpp"

namespace linkgenus {

// Z[Z/n]-module structure on a free lattice: one generator tau of the cyclic
// group acting by an integer matrix with tau^n = identity.
struct CyclicModule {
    Int n = 1;
    IntMatrix tau;

    std::size_t rank() const { return tau.rows(); }
    IntMatrix norm_matrix() const;        // N = 1 + tau + ... + tau^(n-1)
    IntMatrix tau_minus_one() const;

    // Throws ValidationError unless tau is square with tau^n = identity.
    void check() const;
};

// The idele block over one knot: rank 2*c_K, deck generator shifting fiber
// index j -> j+1 with (lambda, mu) coordinates carried unchanged. Basis order
// is (lambda_0, mu_0, lambda_1, mu_1, ...).
CyclicModule induced_module(const LinkWindow& w, const CoverSpec& cover, const std::string& knot);

// Coset module Z[G/D] for the subgroup of order `subgroup_order` in Z/n:
// a single coordinate per coset, cyclically shifted. Shapiro reference block.
CyclicModule coset_module(const Int& n, const Int& subgroup_order);

// Tate cohomology in degree 0: fixed points modulo norms.
FinAbGroup tate_h0(const CyclicModule& m);

// Tate cohomology in degree 1 (equivalently -1 for cyclic groups): norm-zero
// elements modulo the image of tau - 1. Trivial on induced modules.
FinAbGroup tate_h1(const CyclicModule& m);

// Constructive norm-one descent: given a cover idele with norm zero (all
// fiber coordinate sums vanish), returns b with deck_act(1, b) - b = a, built
// per fiber by prefix sums anchored at component 0 = (0, 0). The identity is
// re-verified exactly before returning. A nonzero norm is rejected with the
// offending knot and its fiber sums in the message.
CoverIdele hilbert90_solve(const CoverSpec& cover, const CoverIdele& a);

} // namespace linkgenus
