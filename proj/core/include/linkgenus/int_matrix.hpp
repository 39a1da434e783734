#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "linkgenus/integers.hpp"

namespace linkgenus {

// Dense integer matrix, row-major, exact entries. Rows or columns may be zero
// (the empty relator lists that show up for empty windows are real inputs).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c);
    const Int& at(std::size_t r, std::size_t c) const;

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b, col a += k * col b
    void add_row(std::size_t a, std::size_t b, const Int& k);
    void add_col(std::size_t a, std::size_t b, const Int& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& m);

} // namespace linkgenus
