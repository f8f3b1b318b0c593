#pragma once

// Exact Gaussian elimination over a field: incremental span building, rank,
// membership, and linear solves with explicit coordinates.
//
// SpanSolver keeps a reduced echelon basis of the vectors inserted so far.
// Insertion order is remembered: solve() returns coordinates over the
// inserted generators (dependent generators simply get coefficient 0), which
// is what homology-basis extension and persistence structure maps need.
// This is deliberately independent of the Smith-decomposition engine so the
// two can cross-check each other.

#include <cstddef>
#include <optional>
#include <vector>

#include "pershom/matrix.hpp"
#include "pershom/rings.hpp"

namespace pershom {

template <FieldRing F>
class SpanSolver {
public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    SpanSolver(const F& field, std::size_t ambient_dim)
        : field_(field), dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t generators() const { return n_inserted_; }

    // Inserts v as the next generator; returns true iff v was independent of
    // the span so far (and so joined the echelon basis).
    bool insert(const Vec& v) {
        internal_check(v.size() == dim_, "SpanSolver: vector has wrong dimension");
        auto [residual, combo] = reduce(v);
        const std::size_t slot = n_inserted_++;
        auto piv = pivot_of(residual);
        if (!piv) return false;

        // Normalize the new basis row to a unit pivot and record how it is
        // built from the generators: residual = v - sum combo[r] * basis_[r].
        const Elem scale = field_.inv(residual[*piv]);
        for (auto& e : residual) e = field_.mul(scale, e);
        Vec coords(n_inserted_, field_.zero());
        for (std::size_t r = 0; r < combo.size(); ++r) {
            if (field_.is_zero(combo[r])) continue;
            const Elem w = field_.mul(scale, combo[r]);
            for (std::size_t i = 0; i < coords_[r].size(); ++i)
                coords[i] = field_.sub(coords[i], field_.mul(w, coords_[r][i]));
        }
        coords[slot] = scale;
        basis_.push_back(std::move(residual));
        coords_.push_back(std::move(coords));
        pivots_.push_back(*piv);
        return true;
    }

    bool contains(const Vec& v) const {
        internal_check(v.size() == dim_, "SpanSolver: vector has wrong dimension");
        auto [residual, combo] = reduce(v);
        (void)combo;
        return !pivot_of(residual).has_value();
    }

    // Coordinates x (one per inserted generator, in insertion order) with
    // sum x_i * generator_i = v, or empty if v is outside the span.
    std::optional<Vec> solve(const Vec& v) const {
        internal_check(v.size() == dim_, "SpanSolver: vector has wrong dimension");
        auto [residual, combo] = reduce(v);
        if (pivot_of(residual)) return std::nullopt;
        Vec x(n_inserted_, field_.zero());
        for (std::size_t row = 0; row < basis_.size(); ++row) {
            if (field_.is_zero(combo[row])) continue;
            for (std::size_t j = 0; j < coords_[row].size(); ++j)
                x[j] = field_.add(x[j], field_.mul(combo[row], coords_[row][j]));
        }
        return x;
    }

private:
    F field_;
    std::size_t dim_;
    std::vector<Vec> basis_;    // reduced rows, unit pivots
    std::vector<Vec> coords_;   // basis_[r] = sum coords_[r][i] * generator_i
    std::vector<std::size_t> pivots_;
    std::size_t n_inserted_ = 0;

    std::optional<std::size_t> pivot_of(const Vec& v) const {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!field_.is_zero(v[j])) return j;
        return std::nullopt;
    }

    // Eliminates every known pivot from v; combo[r] is the multiple of basis
    // row r that was subtracted, so v = residual + sum combo[r] * basis_[r].
    std::pair<Vec, Vec> reduce(const Vec& v) const {
        Vec residual = v;
        Vec combo(basis_.size(), field_.zero());
        for (std::size_t row = 0; row < basis_.size(); ++row) {
            const Elem& c = residual[pivots_[row]];
            if (field_.is_zero(c)) continue;
            const Elem factor = c;  // basis pivots are 1
            for (std::size_t j = 0; j < dim_; ++j)
                residual[j] = field_.sub(residual[j], field_.mul(factor, basis_[row][j]));
            combo[row] = factor;
        }
        return {std::move(residual), std::move(combo)};
    }
};

template <FieldRing F>
std::vector<typename F::Elem> matrix_column(const Matrix<F>& M, std::size_t j) {
    std::vector<typename F::Elem> col;
    col.reserve(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) col.push_back(M.at(i, j));
    return col;
}

template <FieldRing F>
std::size_t field_rank(const Matrix<F>& M) {
    SpanSolver<F> span(M.ring(), M.rows());
    for (std::size_t j = 0; j < M.cols(); ++j) span.insert(matrix_column(M, j));
    return span.rank();
}

// Solves M x = b; returns the coordinate vector or empty when b is outside
// the column span.
template <FieldRing F>
std::optional<std::vector<typename F::Elem>> solve_columns(const Matrix<F>& M,
                                                           const std::vector<typename F::Elem>& b) {
    SpanSolver<F> span(M.ring(), M.rows());
    for (std::size_t j = 0; j < M.cols(); ++j) span.insert(matrix_column(M, j));
    return span.solve(b);
}

// Basis of the null space of M (vectors of length cols(M)), via reduced row
// echelon form; one basis vector per free column, in column order.
template <FieldRing F>
std::vector<std::vector<typename F::Elem>> field_kernel_basis(const Matrix<F>& M) {
    const F& field = M.ring();
    const std::size_t m = M.rows(), n = M.cols();
    Matrix<F> R = M;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && field.is_zero(R.at(p, col))) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(R.at(p, j), R.at(row, j));
        const auto scale = field.inv(R.at(row, col));
        for (std::size_t j = 0; j < n; ++j) R.at(row, j) = field.mul(scale, R.at(row, j));
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            const auto c = R.at(i, col);
            if (field.is_zero(c)) continue;
            for (std::size_t j = 0; j < n; ++j)
                R.at(i, j) = field.sub(R.at(i, j), field.mul(c, R.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<typename F::Elem> x(n, field.zero());
        x[col] = field.one();
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            x[pivot_col[r]] = field.negate(R.at(r, col));
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace pershom
