#include "linkgenus/smith.hpp"

namespace linkgenus {

std::vector<Int> SmithDecomposition::diagonal() const {
    std::size_t k = std::min(s.rows(), s.cols());
    std::vector<Int> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = s.at(i, i);
    return d;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const Int& v : diagonal())
        if (v != 0) ++r;
    return r;
}

namespace {

// Smallest nonzero |entry| in the submatrix with corner (k, k); ties go to the
// lowest row index, then the lowest column index. Returns false if all zero.
bool find_pivot(const IntMatrix& s, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best = 0;
    for (std::size_t r = k; r < s.rows(); ++r)
        for (std::size_t c = k; c < s.cols(); ++c) {
            const Int& v = s.at(r, c);
            if (v == 0) continue;
            Int a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
            }
        }
    return found;
}

// Euclidean quotient rounding toward zero is what cpp_int's / gives; for the
// reduction loop any quotient with |r - q*p| < |p| works.
Int quot(const Int& a, const Int& b) { return a / b; }

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition dec;
    dec.u = IntMatrix::identity(a.rows());
    dec.s = a;
    dec.v = IntMatrix::identity(a.cols());
    IntMatrix& u = dec.u;
    IntMatrix& s = dec.s;
    IntMatrix& v = dec.v;

    std::size_t dim = std::min(s.rows(), s.cols());
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t pr = k, pc = k;
        if (!find_pivot(s, k, pr, pc)) break;
        s.swap_rows(k, pr);
        u.swap_rows(k, pr);
        s.swap_cols(k, pc);
        v.swap_cols(k, pc);

        for (;;) {
            // Clear column k below the pivot, then row k to its right,
            // re-picking a smaller pivot whenever a reduction leaves one.
            bool dirty = false;
            for (std::size_t r = k + 1; r < s.rows(); ++r) {
                if (s.at(r, k) == 0) continue;
                Int q = quot(s.at(r, k), s.at(k, k));
                if (q != 0) {
                    s.add_row(r, k, -q);
                    u.add_row(r, k, -q);
                }
                if (s.at(r, k) != 0) { // remainder survives: smaller pivot available
                    s.swap_rows(k, r);
                    u.swap_rows(k, r);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t c = k + 1; c < s.cols(); ++c) {
                if (s.at(k, c) == 0) continue;
                Int q = quot(s.at(k, c), s.at(k, k));
                if (q != 0) {
                    s.add_col(c, k, -q);
                    v.add_col(c, k, -q);
                }
                if (s.at(k, c) != 0) {
                    s.swap_cols(k, c);
                    v.swap_cols(k, c);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Row and column are clear. Enforce divisibility: if some entry of
            // the trailing block is not divisible by the pivot, fold its row in
            // and restart the reduction at this pivot.
            bool fixed = false;
            for (std::size_t r = k + 1; r < s.rows() && !fixed; ++r)
                for (std::size_t c = k + 1; c < s.cols() && !fixed; ++c)
                    if (s.at(r, c) % s.at(k, k) != 0) {
                        s.add_row(k, r, 1);
                        u.add_row(k, r, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (s.at(k, k) < 0) {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    return dec;
}

FinAbGroup cokernel(const IntMatrix& a) {
    SmithDecomposition dec = smith_normal_form(a);
    FinAbGroup g;
    std::size_t nonzero = 0;
    for (const Int& d : dec.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) g.invariant_factors.push_back(d);
    }
    g.free_rank = a.rows() - nonzero;
    return g;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    // With U*A*V = S, A*(V e_j) = U^-1 S e_j, so the columns of V at the zero
    // columns of S form a basis of ker A (saturated since V is unimodular).
    SmithDecomposition dec = smith_normal_form(a);
    std::vector<std::size_t> free_cols;
    std::size_t dim = std::min(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (j >= dim || dec.s.at(j, j) == 0) free_cols.push_back(j);
    IntMatrix basis(a.cols(), free_cols.size());
    for (std::size_t jj = 0; jj < free_cols.size(); ++jj)
        for (std::size_t i = 0; i < a.cols(); ++i) basis.at(i, jj) = dec.v.at(i, free_cols[jj]);
    return basis;
}

} // namespace linkgenus
