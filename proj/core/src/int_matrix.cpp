#include "linkgenus/int_matrix.hpp"

#include <sstream>

namespace linkgenus {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        internal_check(row.size() == cols_, "IntMatrix: ragged initializer");
        for (const auto& v : row) e_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
    internal_check(r < rows_ && c < cols_, "IntMatrix: index out of range");
    return e_[r * cols_ + c];
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    internal_check(r < rows_ && c < cols_, "IntMatrix: index out of range");
    return e_[r * cols_ + c];
}

bool IntMatrix::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& k) {
    internal_check(a != b, "IntMatrix: add_row onto itself");
    for (std::size_t c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& k) {
    internal_check(a != b, "IntMatrix: add_col onto itself");
    for (std::size_t r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    internal_check(a.cols() == b.rows(), "mul: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    }
    os << "]";
    return os.str();
}

} // namespace linkgenus
