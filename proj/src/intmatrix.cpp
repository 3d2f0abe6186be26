#include "intmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ratknot {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Integer det_exact(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact by the Bareiss identity
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

Integer first_minor(const IntMatrix& m, std::size_t drop_row, std::size_t drop_col)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("first_minor: matrix must be square");
    if (drop_row >= m.rows() || drop_col >= m.cols())
        throw std::invalid_argument("first_minor: index out of range");
    IntMatrix sub(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, sj = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            sub.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return det_exact(sub);
}

namespace {

void row_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(dst, j) += q * a.at(src, j);
}

void col_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, dst) += q * a.at(i, src);
}

bool find_min_pivot(const IntMatrix& a, std::size_t s, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Integer best = 0;
    for (std::size_t i = s; i < a.rows(); ++i) {
        for (std::size_t j = s; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Integer mag = abs_int(a.at(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m)
{
    IntMatrix a = m;
    const std::size_t dim = std::min(a.rows(), a.cols());
    SnfResult result;
    result.diagonal.assign(dim, Integer(0));

    for (std::size_t s = 0; s < dim; ++s) {
        for (;;) {
            std::size_t pr = s, pc = s;
            if (!find_min_pivot(a, s, pr, pc)) {
                // remaining block is zero; diagonal stays padded with zeros
                return result;
            }
            if (pr != s)
                for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(s, j), a.at(pr, j));
            if (pc != s)
                for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, s), a.at(i, pc));

            bool clean = true;
            for (std::size_t i = s + 1; i < a.rows(); ++i) {
                const Integer q = a.at(i, s) / a.at(s, s);
                row_axpy(a, i, s, -q);
                if (a.at(i, s) != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < a.cols(); ++j) {
                const Integer q = a.at(s, j) / a.at(s, s);
                col_axpy(a, j, s, -q);
                if (a.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller residues appeared; re-pivot

            // pivot must divide the rest of the block for the divisibility chain
            bool divides = true;
            for (std::size_t i = s + 1; i < a.rows() && divides; ++i) {
                for (std::size_t j = s + 1; j < a.cols() && divides; ++j) {
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        row_axpy(a, s, i, Integer(1));
                        divides = false;
                    }
                }
            }
            if (divides) break;
        }
        if (a.at(s, s) < 0)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(s, j) = -a.at(s, j);
        result.diagonal[s] = a.at(s, s);
    }
    return result;
}

}  // namespace ratknot
