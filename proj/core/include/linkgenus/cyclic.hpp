#pragma once

#include <vector>

#include "linkgenus/integers.hpp"

namespace linkgenus {

// Subgroup of Z/n generated by a set of residues: cyclic, generated by the
// gcd of the residues with n.
struct CyclicSubgroup {
    Int order;
    Int generator; // canonical representative in [0, n)
};

// Requires n >= 1; the empty generating set yields the trivial subgroup.
CyclicSubgroup cyclic_subgroup(const Int& n, const std::vector<Int>& gens);

// Element of H_1 of a knot boundary torus: lambda*[longitude] + mu*[meridian].
struct TorusClass {
    Int lambda;
    Int mu;

    bool operator==(const TorusClass& o) const = default;
    bool is_zero() const { return lambda == 0 && mu == 0; }

    TorusClass operator+(const TorusClass& o) const { return {lambda + o.lambda, mu + o.mu}; }
    TorusClass operator-(const TorusClass& o) const { return {lambda - o.lambda, mu - o.mu}; }
    TorusClass operator-() const { return {-lambda, -mu}; }
};

// Kernel lattice of (x, y) |-> x*mu_char + y*lambda_char mod n on the torus,
// in Hermite-style form: basis (e, 0), (t, d) in (mu, lambda) coordinates
// with 0 <= t < e and determinant e*d equal to the index.
struct TorusLattice {
    Int e; // order of mu_char in Z/n
    Int d; // |<mu_char, lambda_char>| / e
    Int t; // unique in [0, e) with mu_char*t + lambda_char*d = 0 mod n

    TorusClass beta_mu() const { return {0, e}; }
    TorusClass beta_lambda() const { return {d, t}; }

    // Membership test: is v in the lattice spanned by beta_mu, beta_lambda?
    bool contains(const TorusClass& v) const;
};

// Requires n >= 1; characters are reduced mod n internally.
TorusLattice torus_kernel_lattice(const Int& n, const Int& mu_char, const Int& lambda_char);

} // namespace linkgenus
