#include "linkgenus/cyclic.hpp"

#include <sstream>

namespace linkgenus {

Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

Int mod_solve(const Int& a, const Int& b, const Int& n) {
    internal_check(n >= 1, "mod_solve: modulus must be positive");
    Int an = mod_norm(a, n), bn = mod_norm(b, n);
    Int x, y;
    Int g = egcd(an, n, x, y);
    internal_check(bn % g == 0, "mod_solve: no solution");
    Int m = n / g;
    return mod_norm(x * (bn / g), m);
}

std::size_t to_size(const Int& v, const std::string& context) {
    if (v < 0 || v > 1000000000)
        throw PreconditionError(context + ": value " + to_string(v) + " out of enumerable range");
    return static_cast<std::size_t>(v.convert_to<unsigned long long>());
}

std::string to_string(const Int& v) { return v.str(); }

CyclicSubgroup cyclic_subgroup(const Int& n, const std::vector<Int>& gens) {
    if (n < 1) throw ValidationError("cyclic_subgroup: modulus must be >= 1, got " + to_string(n));
    Int g = n;
    for (const Int& a : gens) g = gcd(g, mod_norm(a, n));
    // g == n means the trivial subgroup; its generator is the zero residue.
    return {n / g, mod_norm(g, n)};
}

bool TorusLattice::contains(const TorusClass& v) const {
    // v = alpha*(e,0) + beta*(t,d) in (mu, lambda) coordinates forces
    // beta = lambda/d, then alpha = (mu - beta*t)/e.
    if (v.lambda % d != 0) return false;
    Int beta = v.lambda / d;
    return (v.mu - beta * t) % e == 0;
}

TorusLattice torus_kernel_lattice(const Int& n, const Int& mu_char, const Int& lambda_char) {
    if (n < 1) throw ValidationError("torus_kernel_lattice: degree must be >= 1, got " + to_string(n));
    Int mu = mod_norm(mu_char, n), la = mod_norm(lambda_char, n);
    TorusLattice lat;
    lat.e = residue_order(mu, n);
    Int sub = cyclic_subgroup(n, {mu, la}).order; // = d*e
    internal_check(sub % lat.e == 0, "torus_kernel_lattice: subgroup order not divisible by e");
    lat.d = sub / lat.e;
    // mu*t = -lambda*d (mod n); solvable because gcd(mu, n) divides lambda*d.
    lat.t = mod_solve(mu, -la * lat.d, n);
    internal_check(lat.t >= 0 && lat.t < lat.e, "torus_kernel_lattice: t out of range");
    internal_check(mod_norm(mu * lat.t + la * lat.d, n) == 0, "torus_kernel_lattice: basis off the kernel");
    return lat;
}

} // namespace linkgenus
