#pragma once

#include "integer.hpp"

#include <cstddef>
#include <vector>

namespace ratknot {

// Dense matrix of exact integers.  Sizes here never exceed a few dozen
// rows, so no sparse machinery.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination; intermediate
// entries stay integral.  The empty 0x0 matrix has determinant 1.
// Throws std::invalid_argument on a non-square input.
Integer det_exact(const IntMatrix& m);

// det_exact of m with drop_row and drop_col removed; indices must be in
// range.  A 1x1 input yields the empty determinant, 1.
Integer first_minor(const IntMatrix& m, std::size_t drop_row, std::size_t drop_col);

// Invariant factors d_1 | d_2 | ..., non-negative, padded with zeros to
// min(rows, cols).
struct SnfResult {
    std::vector<Integer> diagonal;
};

// Smith normal form over the integers: row/column swaps, negations and
// integer shears only.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace ratknot
