#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer_matrix.hpp"

namespace limone {

// Quotient rounded toward minus infinity, used to reduce entries above a
// Hermite pivot into [0, pivot).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) q -= 1;
    return q;
}

// Row-style Hermite normal form of the span of the given rows: pivot columns
// strictly increase, pivots are positive, entries above a pivot are reduced
// modulo it, zero rows are dropped.  The result is the unique canonical
// basis of the row span.
inline std::vector<std::vector<Int>> hermite_normal_form(
    std::size_t dim, std::vector<std::vector<Int>> rows) {
    for (const auto& row : rows)
        if (row.size() != dim)
            throw dimension_error("generator length does not match ambient dimension");

    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        // Euclidean elimination among rows r.. in this column.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;
            bool leftover = false;
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[best][col];
                for (std::size_t j = 0; j < dim; ++j)
                    rows[i][j] -= q * rows[best][j];
                if (rows[i][col] != 0) leftover = true;
            }
            if (!leftover) {
                std::swap(rows[r], rows[best]);
                break;
            }
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (std::size_t j = 0; j < dim; ++j) rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][col], rows[r][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Sublattice of Z^dim stored by its Hermite basis, so equality of spans is
// structural equality.
class Lattice {
public:
    static Lattice standard(std::size_t dim) {
        Lattice l;
        l.dim_ = dim;
        l.basis_.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Int> row(dim);
            row[i] = 1;
            l.basis_.push_back(std::move(row));
        }
        return l;
    }

    static Lattice from_generators(std::size_t dim, std::vector<std::vector<Int>> gens) {
        Lattice l;
        l.dim_ = dim;
        l.basis_ = hermite_normal_form(dim, std::move(gens));
        return l;
    }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::vector<Int>>& basis() const { return basis_; }

    // Coordinates of v in the Hermite basis, or nothing if v is outside the
    // span.  Back-substitution along the staircase of pivots.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& v) const {
        if (v.size() != dim_)
            throw dimension_error("vector length does not match ambient dimension");
        std::vector<Int> rest = v;
        std::vector<Int> coords(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t p = pivot_column(i);
            if (rest[p] % basis_[i][p] != 0) return std::nullopt;
            Int q = rest[p] / basis_[i][p];
            coords[i] = q;
            if (q != 0)
                for (std::size_t j = 0; j < dim_; ++j) rest[j] -= q * basis_[i][j];
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (rest[j] != 0) return std::nullopt;
        return coords;
    }

    bool contains(const std::vector<Int>& v) const { return solve(v).has_value(); }

    std::vector<Int> coordinates(const std::vector<Int>& v) const {
        auto c = solve(v);
        if (!c) throw membership_error("vector is outside the lattice");
        return *c;
    }

    bool operator==(const Lattice&) const = default;

private:
    std::size_t pivot_column(std::size_t i) const {
        for (std::size_t j = 0; j < dim_; ++j)
            if (basis_[i][j] != 0) return j;
        throw consistency_error("zero row in a Hermite basis");
    }

    std::size_t dim_ = 0;
    std::vector<std::vector<Int>> basis_;
};

// Image lattice {x m : x in l}; rows act on the right, so the image lives in
// Z^cols.
inline Lattice lattice_image(const IntMatrix& m, const Lattice& l) {
    if (l.dim() != m.rows())
        throw dimension_error("lattice dimension does not match matrix rows");
    std::vector<std::vector<Int>> gens;
    gens.reserve(l.rank());
    for (const auto& b : l.basis()) gens.push_back(row_times(b, m));
    return Lattice::from_generators(m.cols(), std::move(gens));
}

inline bool lattice_equal(const Lattice& a, const Lattice& b) { return a == b; }

} // namespace limone
