#pragma once

// Dense matrices over a Euclidean ring, with elementary row/column
// operations.
//
// A row operation is left-multiplication by an elementary matrix, a column
// operation is right-multiplication.  Transvect(target, source, alpha) on
// the row side adds alpha * row_source to row_target; on the column side it
// adds alpha * col_source to col_target.  Dilate(k, mu) requires mu to be a
// unit.  Swap(k, k) is the identity.
//
// Zero-dimension matrices (0 rows and/or 0 columns) are legal everywhere.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pershom/rings.hpp"

namespace pershom {

template <EuclideanRing R>
class Matrix {
public:
    using Elem = typename R::Elem;

    Matrix(const R& ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

    static Matrix identity(const R& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = ring.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const R& ring() const { return ring_; }

    Elem& at(std::size_t i, std::size_t j) {
        internal_check(i < rows_ && j < cols_, "matrix index out of range");
        return entries_[i * cols_ + j];
    }
    const Elem& at(std::size_t i, std::size_t j) const {
        internal_check(i < rows_ && j < cols_, "matrix index out of range");
        return entries_[i * cols_ + j];
    }

    bool operator==(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            if (!ring_.eq(entries_[k], other.entries_[k])) return false;
        return true;
    }

private:
    R ring_;
    std::size_t rows_, cols_;
    std::vector<Elem> entries_;
};

enum class Side { Row, Col };

template <EuclideanRing R>
struct ElementaryOp {
    using Elem = typename R::Elem;

    struct Swap {
        std::size_t k1, k2;
    };
    struct Dilate {
        std::size_t k;
        Elem mu;  // must be a unit
    };
    struct Transvect {
        std::size_t target, source;  // target != source
        Elem alpha;
    };

    Side side;
    std::variant<Swap, Dilate, Transvect> kind;

    static ElementaryOp swap(Side s, std::size_t k1, std::size_t k2) {
        return {s, Swap{k1, k2}};
    }
    static ElementaryOp dilate(Side s, std::size_t k, Elem mu) {
        return {s, Dilate{k, std::move(mu)}};
    }
    static ElementaryOp transvect(Side s, std::size_t target, std::size_t source, Elem alpha) {
        return {s, Transvect{target, source, std::move(alpha)}};
    }
};

// Applies op to M in place.  Throws ValidationError for out-of-range
// indices, a non-unit dilation factor, or a transvection with target ==
// source.
template <EuclideanRing R>
void apply_elementary_inplace(Matrix<R>& M, const ElementaryOp<R>& op) {
    const R& ring = M.ring();
    const std::size_t extent = op.side == Side::Row ? M.rows() : M.cols();
    const std::size_t span = op.side == Side::Row ? M.cols() : M.rows();

    auto cell = [&](std::size_t k, std::size_t t) -> typename R::Elem& {
        return op.side == Side::Row ? M.at(k, t) : M.at(t, k);
    };

    if (const auto* sw = std::get_if<typename ElementaryOp<R>::Swap>(&op.kind)) {
        validate(sw->k1 < extent && sw->k2 < extent, "elementary swap index out of range");
        if (sw->k1 == sw->k2) return;
        for (std::size_t t = 0; t < span; ++t) std::swap(cell(sw->k1, t), cell(sw->k2, t));
    } else if (const auto* di = std::get_if<typename ElementaryOp<R>::Dilate>(&op.kind)) {
        validate(di->k < extent, "elementary dilation index out of range");
        validate(ring.is_unit(di->mu), "elementary dilation factor must be a unit");
        for (std::size_t t = 0; t < span; ++t) cell(di->k, t) = ring.mul(di->mu, cell(di->k, t));
    } else {
        const auto& tv = std::get<typename ElementaryOp<R>::Transvect>(op.kind);
        validate(tv.target < extent && tv.source < extent,
                 "elementary transvection index out of range");
        validate(tv.target != tv.source, "elementary transvection target must differ from source");
        for (std::size_t t = 0; t < span; ++t)
            cell(tv.target, t) = ring.add(cell(tv.target, t), ring.mul(tv.alpha, cell(tv.source, t)));
    }
}

template <EuclideanRing R>
Matrix<R> apply_elementary(const Matrix<R>& M, const ElementaryOp<R>& op) {
    Matrix<R> out = M;
    apply_elementary_inplace(out, op);
    return out;
}

template <EuclideanRing R>
Matrix<R> mat_mul(const Matrix<R>& A, const Matrix<R>& B) {
    const R& ring = A.ring();
    internal_check(A.cols() == B.rows(), "matrix product shape mismatch");
    Matrix<R> out(ring, A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (ring.is_zero(A.at(i, k))) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                out.at(i, j) = ring.add(out.at(i, j), ring.mul(A.at(i, k), B.at(k, j)));
        }
    return out;
}

template <EuclideanRing R>
bool is_zero_matrix(const Matrix<R>& M) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M.ring().is_zero(M.at(i, j))) return false;
    return true;
}

}  // namespace pershom
