#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "linkgenus/errors.hpp"

namespace linkgenus {

// Exact arbitrary-precision integer used throughout; arithmetic never overflows.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Canonical representative of a mod n in [0, n). Requires n >= 1.
inline Int mod_norm(const Int& a, const Int& n) {
    internal_check(n >= 1, "mod_norm: modulus must be positive");
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Multiplicative order of a in Z/n, i.e. n / gcd(a, n). Requires n >= 1.
inline Int residue_order(const Int& a, const Int& n) {
    internal_check(n >= 1, "residue_order: modulus must be positive");
    return n / gcd(mod_norm(a, n), n);
}

// Extended gcd: returns g = gcd(a, b) and fills x, y with a*x + b*y = g.
Int egcd(const Int& a, const Int& b, Int& x, Int& y);

// Smallest nonnegative t with a*t = b (mod n), or throws InternalError when
// gcd(a, n) does not divide b. Requires n >= 1.
Int mod_solve(const Int& a, const Int& b, const Int& n);

// Narrowing cast used by enumeration code; throws PreconditionError when the
// value does not fit (desk-scale guard, not an overflow).
std::size_t to_size(const Int& v, const std::string& context);

std::string to_string(const Int& v);

} // namespace linkgenus
