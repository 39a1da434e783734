#include "linkgenus/fin_ab_group.hpp"

#include <sstream>

#include "linkgenus/int_matrix.hpp"
#include "linkgenus/smith.hpp"

namespace linkgenus {

Int FinAbGroup::torsion_order() const {
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
}

FinAbGroup FinAbGroup::cyclic(const Int& n) {
    internal_check(n >= 1, "FinAbGroup::cyclic: order must be positive");
    FinAbGroup g;
    if (n >= 2) g.invariant_factors.push_back(n);
    return g;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    // Recompute canonical invariant factors as the cokernel of the diagonal
    // matrix carrying every factor of both summands.
    std::vector<Int> fs = a.invariant_factors;
    fs.insert(fs.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    IntMatrix diag(fs.size(), fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) diag.at(i, i) = fs[i];
    FinAbGroup g = cokernel(diag);
    g.free_rank = a.free_rank + b.free_rank;
    return g;
}

std::string to_string(const FinAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank > 1) {
        os << "Z^" << g.free_rank;
        first = false;
    }
    for (const Int& f : g.invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << f;
        first = false;
    }
    return os.str();
}

} // namespace linkgenus
