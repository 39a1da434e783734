#include "linkgenus/tate.hpp"

#include <sstream>

namespace linkgenus {

namespace {

IntMatrix mat_pow(const IntMatrix& m, Int k) {
    IntMatrix acc = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if ((k & 1) != 0) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

} // namespace

IntMatrix CyclicModule::norm_matrix() const {
    std::size_t iters = to_size(n, "CyclicModule::norm_matrix");
    IntMatrix acc = IntMatrix::identity(rank());
    IntMatrix sum = IntMatrix::identity(rank());
    for (std::size_t k = 1; k < iters; ++k) {
        acc = mul(acc, tau);
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) sum.at(i, j) += acc.at(i, j);
    }
    return sum;
}

IntMatrix CyclicModule::tau_minus_one() const {
    IntMatrix m = tau;
    for (std::size_t i = 0; i < rank(); ++i) m.at(i, i) -= 1;
    return m;
}

void CyclicModule::check() const {
    if (n < 1) throw ValidationError("CyclicModule: group order must be >= 1");
    if (tau.rows() != tau.cols()) throw ValidationError("CyclicModule: tau must be square");
    if (mat_pow(tau, n) != IntMatrix::identity(rank()))
        throw ValidationError("CyclicModule: tau^n is not the identity");
}

CyclicModule induced_module(const LinkWindow& w, const CoverSpec& cover, const std::string& knot) {
    KnotSplitting s = splitting_invariants(w, cover, knot);
    std::size_t c = to_size(s.c, "induced_module");
    CyclicModule m;
    m.n = cover.n;
    m.tau = IntMatrix(2 * c, 2 * c);
    for (std::size_t j = 0; j < c; ++j) {
        std::size_t jn = (j + 1) % c;
        m.tau.at(2 * jn, 2 * j) = 1;         // lambda coordinate
        m.tau.at(2 * jn + 1, 2 * j + 1) = 1; // mu coordinate
    }
    return m;
}

CyclicModule coset_module(const Int& n, const Int& subgroup_order) {
    if (n < 1 || subgroup_order < 1 || n % subgroup_order != 0)
        throw ValidationError("coset_module: subgroup order must divide the group order");
    std::size_t c = to_size(n / subgroup_order, "coset_module");
    CyclicModule m;
    m.n = n;
    m.tau = IntMatrix(c, c);
    for (std::size_t j = 0; j < c; ++j) m.tau.at((j + 1) % c, j) = 1;
    return m;
}

namespace {

// Solve basis * y = w for each column w of `cols`, exactly. `basis` must have
// full column rank with every column of `cols` inside its span; both hold for
// the saturated kernels paired with equivariant images here.
IntMatrix solve_in_basis(const IntMatrix& basis, const IntMatrix& cols) {
    SmithDecomposition dec = smith_normal_form(basis);
    std::size_t r0 = basis.cols();
    internal_check(dec.rank() == r0, "solve_in_basis: basis columns are dependent");
    IntMatrix uw = mul(dec.u, cols);
    IntMatrix ytil(r0, cols.cols());
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            if (i < r0) {
                const Int& s = dec.s.at(i, i);
                internal_check(uw.at(i, j) % s == 0, "solve_in_basis: non-integral coordinate");
                ytil.at(i, j) = uw.at(i, j) / s;
            } else {
                internal_check(uw.at(i, j) == 0, "solve_in_basis: column outside span");
            }
        }
    }
    return mul(dec.v, ytil);
}

FinAbGroup sub_quotient(const IntMatrix& kernel_of, const IntMatrix& image_of,
                        const char* what) {
    IntMatrix basis = kernel_basis(kernel_of);
    IntMatrix coords = solve_in_basis(basis, image_of);
    FinAbGroup g = cokernel(coords);
    internal_check(g.is_finite(), std::string(what) + ": quotient came out infinite");
    return g;
}

} // namespace

FinAbGroup tate_h0(const CyclicModule& m) {
    m.check();
    return sub_quotient(m.tau_minus_one(), m.norm_matrix(), "tate_h0");
}

FinAbGroup tate_h1(const CyclicModule& m) {
    m.check();
    return sub_quotient(m.norm_matrix(), m.tau_minus_one(), "tate_h1");
}

CoverIdele hilbert90_solve(const CoverSpec& cover, const CoverIdele& a) {
    for (const auto& [knot, fiber] : a.support) {
        Int L = 0, M = 0;
        for (const TorusClass& t : fiber) {
            L += t.lambda;
            M += t.mu;
        }
        if (L != 0 || M != 0) {
            std::ostringstream os;
            os << "norm of input is nonzero: fiber over \"" << knot << "\" sums to (lambda "
               << L << ", mu " << M << ")";
            throw PreconditionError(os.str());
        }
    }

    CoverIdele b;
    for (const auto& [knot, fiber] : a.support) {
        std::vector<TorusClass> sol(fiber.size(), TorusClass{0, 0});
        // (tau b)_j - b_j = b_{j-1} - b_j must equal a_j, so walk the orbit.
        for (std::size_t j = 1; j < fiber.size(); ++j) sol[j] = sol[j - 1] - fiber[j];
        b.support[knot] = std::move(sol);
    }

    CoverIdele rotated = deck_act(cover, 1, b);
    for (const auto& [knot, fiber] : a.support) {
        if (fiber.empty()) continue;
        const auto& bs = b.support.at(knot);
        const auto& rs = rotated.support.at(knot);
        for (std::size_t j = 0; j < fiber.size(); ++j)
            internal_check(rs[j] - bs[j] == fiber[j], "hilbert90_solve: identity check failed");
    }
    return b;
}

} // namespace linkgenus
