#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace limone {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix.  All routines below are exact: normal forms and
// determinants run in integer arithmetic only, with growth absorbed by the
// arbitrary-precision entry type.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw dimension_error("matrix rows have unequal lengths");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return entries_[i * cols_ + j];
    }

    const Int& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw dimension_error("matrix product shape mismatch");
        IntMatrix p(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    p.at(i, j) += a * rhs.at(k, j);
            }
        return p;
    }

    IntMatrix pow(unsigned n) const {
        if (rows_ != cols_) throw dimension_error("power of a non-square matrix");
        IntMatrix acc = identity(rows_);
        IntMatrix base = *this;
        while (n > 0) {
            if (n & 1u) acc = acc * base;
            base = base * base;
            n >>= 1u;
        }
        return acc;
    }

    bool is_square() const { return rows_ == cols_; }

    std::string to_string() const {
        std::ostringstream out;
        out << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out << (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j > 0) out << ", ";
                out << at(i, j);
            }
            out << "]";
            if (i + 1 < rows_) out << ",";
        }
        out << "]";
        return out.str();
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw domain_error("matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

// Row vector times matrix; vectors act on the right throughout.
inline std::vector<Int> row_times(const std::vector<Int>& x, const IntMatrix& m) {
    if (x.size() != m.rows())
        throw dimension_error("row vector length does not match matrix rows");
    std::vector<Int> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m.at(i, j);
    }
    return y;
}

// Signed determinant by Bareiss fraction-free elimination.  Every division
// in the schedule is exact over the integers.
inline Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw dimension_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Coefficients of det(xI - m), monic and in descending degree order, via the
// Faddeev-LeVerrier recurrence.  The division by the step index is exact.
inline std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
    if (!m.is_square())
        throw dimension_error("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Int> coeff(n + 1);
    coeff[0] = 1;
    IntMatrix acc = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            acc = m * acc;
            for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += coeff[k - 1];
        }
        IntMatrix prod = m * acc;
        Int trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += prod.at(i, i);
        if (trace % Int(k) != 0)
            throw consistency_error("inexact trace division in characteristic polynomial");
        coeff[k] = -trace / Int(k);
    }
    return coeff;
}

// Invariant factors d_1 | d_2 | ... of the matrix, nonnegative, padded with
// zeros to min(rows, cols).
struct SmithForm {
    std::vector<Int> invariants;

    std::size_t rank() const {
        std::size_t r = 0;
        for (const Int& d : invariants)
            if (d != 0) ++r;
        return r;
    }

    bool operator==(const SmithForm&) const = default;
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    std::vector<std::vector<Int>> a(r, std::vector<Int>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a[i][j] = m.at(i, j);

    const std::size_t limit = std::min(r, c);
    SmithForm form;
    form.invariants.assign(limit, 0);

    std::size_t t = 0;
    while (t < limit) {
        // Pivot on the smallest nonzero entry of the trailing block; the
        // pivot magnitude never increases, which bounds the corrective loop.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (a[i][j] == 0) continue;
                if (!found || abs(a[i][j]) < abs(a[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < r; ++i) std::swap(a[i][t], a[i][pj]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = t; i < r; ++i) std::swap(a[i][t], a[i][j]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Row and column are clear; force the pivot to divide the rest.
            for (std::size_t i = t + 1; i < r && settled; ++i)
                for (std::size_t j = t + 1; j < c && settled; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < c; ++jj) a[t][jj] += a[i][jj];
                        settled = false;
                    }
        }
        if (a[t][t] < 0)
            for (std::size_t j = t; j < c; ++j) a[t][j] = -a[t][j];
        form.invariants[t] = a[t][t];
        ++t;
    }
    return form;
}

// Primitivity of a nonnegative square matrix: some power is entrywise
// positive.  Powers are taken in the boolean semiring up to the Wielandt
// bound (n-1)^2 + 1, past which no new positivity can appear.
inline bool is_primitive_matrix(const IntMatrix& m) {
    if (!m.is_square()) throw dimension_error("primitivity of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw domain_error("primitivity of an empty matrix");
    std::vector<std::vector<bool>> base(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j) < 0)
                throw domain_error("primitivity requires a nonnegative matrix");
            base[i][j] = m.at(i, j) > 0;
        }

    auto all_positive = [n](const std::vector<std::vector<bool>>& p) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!p[i][j]) return false;
        return true;
    };
    auto bool_mult = [n](const std::vector<std::vector<bool>>& x,
                         const std::vector<std::vector<bool>>& y) {
        std::vector<std::vector<bool>> z(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (!x[i][k]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (y[k][j]) z[i][j] = true;
            }
        return z;
    };

    const std::size_t bound = (n - 1) * (n - 1) + 1;
    std::vector<std::vector<bool>> power = base;
    for (std::size_t step = 1; step <= bound; ++step) {
        if (all_positive(power)) return true;
        power = bool_mult(power, base);
    }
    return false;
}

} // namespace limone
