#pragma once

#include <string>
#include <vector>

#include "linkgenus/integers.hpp"

namespace linkgenus {

// Finitely generated abelian group in canonical form: Z^free_rank plus one
// Z/f per invariant factor, factors >= 2 and each dividing the next.
struct FinAbGroup {
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;

    bool operator==(const FinAbGroup& o) const = default;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    bool is_finite() const { return free_rank == 0; }
    // At most one cyclic summand and no free part (the trivial group counts).
    bool is_cyclic() const { return free_rank == 0 && invariant_factors.size() <= 1; }

    // Order of the torsion part (the whole group when finite).
    Int torsion_order() const;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup cyclic(const Int& n);
    static FinAbGroup free(std::size_t rank) { return {{}, rank}; }
};

// Canonical form of the direct sum (re-runs the invariant factor computation).
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// "0", "Z/6", "Z^2 + Z/2 + Z/4", ...
std::string to_string(const FinAbGroup& g);

} // namespace linkgenus
