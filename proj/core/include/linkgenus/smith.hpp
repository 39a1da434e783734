#pragma once

#include <vector>

#include "linkgenus/fin_ab_group.hpp"
#include "linkgenus/int_matrix.hpp"

namespace linkgenus {

// U * A * V = S with U, V unimodular and S diagonal, diagonal entries
// nonnegative and each dividing the next.
struct SmithDecomposition {
    IntMatrix u; // rows x rows
    IntMatrix s; // rows x cols
    IntMatrix v; // cols x cols

    std::vector<Int> diagonal() const;
    std::size_t rank() const; // number of nonzero diagonal entries
};

// Deterministic: pivot is the smallest nonzero absolute value in the work
// submatrix, ties broken by lowest row then lowest column index.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Z^rows / (column span of a), in canonical form.
FinAbGroup cokernel(const IntMatrix& a);

// Basis of {x : a*x = 0} as matrix columns (a primitive basis: the kernel of
// an integer matrix is a saturated sublattice).
IntMatrix kernel_basis(const IntMatrix& a);

} // namespace linkgenus
