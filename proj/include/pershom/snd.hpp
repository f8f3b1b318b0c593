#pragma once

// Smith Normal Decompositions over a Euclidean ring.
//
// snd(A) returns (U, D, V) with A*V = U*D maintained exactly at every step,
// U and V accumulated products of elementary matrices (so invertible by
// construction), and D the Smith Normal Form: diagonal, entries canonical
// under unit_normalize, d_1 | d_2 | ... | d_r.  Under that convention
// U^{-1}*A*V = D.
//
// Pivot rule: among nonzero entries of the active submatrix with minimal
// norm, the smallest (row, col) lexicographically.  Clearing a pivot's row
// and column can leave remainders (over Z); the engine then reselects a
// strictly smaller pivot, so termination is well-founded descent on the
// pivot norm.  Once row and column are clear, an interior entry that the
// pivot does not divide has its row added to the pivot row and the step
// reruns; this enforces the divisibility chain.
//
// snd_observed additionally reports every elementary operation applied to
// the working matrix (after U/V have been updated); the graded layer uses
// this to track degree labels and check homogeneity preservation.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pershom/matrix.hpp"

namespace pershom {

template <EuclideanRing R>
struct SndResult {
    Matrix<R> U, D, V;
    std::size_t rank;
    std::vector<typename R::Elem> diagonal;  // canonical d_1 .. d_r
};

struct SndObserverNoop {
    template <class Op, class Mat>
    void operator()(const Op&, const Mat&) {}
};

template <EuclideanRing R, class Observer>
SndResult<R> snd_observed(const Matrix<R>& A, Observer&& observe) {
    const R ring = A.ring();
    const std::size_t m = A.rows(), n = A.cols();
    using Op = ElementaryOp<R>;

    Matrix<R> D = A;
    Matrix<R> U = Matrix<R>::identity(ring, m);
    Matrix<R> V = Matrix<R>::identity(ring, n);

    // Row operation L on D; U <- U * L^{-1} keeps A*V = U*D.
    auto do_row = [&](const Op& op) {
        apply_elementary_inplace(D, op);
        if (const auto* sw = std::get_if<typename Op::Swap>(&op.kind)) {
            apply_elementary_inplace(U, Op::swap(Side::Col, sw->k1, sw->k2));
        } else if (const auto* di = std::get_if<typename Op::Dilate>(&op.kind)) {
            apply_elementary_inplace(U, Op::dilate(Side::Col, di->k, unit_inv(ring, di->mu)));
        } else {
            const auto& tv = std::get<typename Op::Transvect>(op.kind);
            apply_elementary_inplace(
                U, Op::transvect(Side::Col, tv.source, tv.target, ring.negate(tv.alpha)));
        }
        observe(op, D);
    };

    // Column operation E on D; V <- V * E.
    auto do_col = [&](const Op& op) {
        apply_elementary_inplace(D, op);
        apply_elementary_inplace(V, op);
        observe(op, D);
    };

    // Minimal-norm nonzero entry of D[k.., k..], first (row, col) on ties.
    auto find_pivot = [&](std::size_t k) -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        typename R::Norm best_norm{};
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (ring.is_zero(D.at(i, j))) continue;
                auto nm = ring.norm(D.at(i, j));
                if (!best || nm < best_norm) {
                    best = {{i, j}};
                    best_norm = nm;
                }
            }
        return best;
    };

    const std::size_t kmax = std::min(m, n);
    std::size_t k = 0;
    while (k < kmax) {
        auto piv = find_pivot(k);
        if (!piv) break;
        if (piv->first != k) do_row(Op::swap(Side::Row, k, piv->first));
        if (piv->second != k) do_col(Op::swap(Side::Col, k, piv->second));

        // Clear row k with column transvections; remainders stay behind.
        bool clean = true;
        for (std::size_t j = k + 1; j < n; ++j) {
            if (ring.is_zero(D.at(k, j))) continue;
            auto [q, r] = ring.div_rem(D.at(k, j), D.at(k, k));
            if (!ring.is_zero(q)) do_col(Op::transvect(Side::Col, j, k, ring.negate(q)));
            if (!ring.is_zero(D.at(k, j))) clean = false;
        }
        if (!clean) continue;  // a remainder is a strictly smaller pivot candidate

        // Clear column k with row transvections; row k stays clear because
        // its entries beyond the pivot are zero now.
        for (std::size_t i = k + 1; i < m; ++i) {
            if (ring.is_zero(D.at(i, k))) continue;
            auto [q, r] = ring.div_rem(D.at(i, k), D.at(k, k));
            if (!ring.is_zero(q)) do_row(Op::transvect(Side::Row, i, k, ring.negate(q)));
            if (!ring.is_zero(D.at(i, k))) clean = false;
        }
        if (!clean) continue;

        // Divisibility repair: pull a bad interior row into the pivot row.
        bool repaired = false;
        for (std::size_t i = k + 1; i < m && !repaired; ++i)
            for (std::size_t j = k + 1; j < n && !repaired; ++j) {
                if (ring.is_zero(D.at(i, j))) continue;
                if (!divides(ring, D.at(k, k), D.at(i, j))) {
                    do_row(Op::transvect(Side::Row, k, i, ring.one()));
                    repaired = true;
                }
            }
        if (repaired) continue;

        ++k;
    }
    const std::size_t rank = k;

    // Normalize the diagonal to canonical associates with column dilations.
    std::vector<typename R::Elem> diagonal;
    diagonal.reserve(rank);
    for (std::size_t t = 0; t < rank; ++t) {
        auto [u, canonical] = ring.unit_normalize(D.at(t, t));
        if (!ring.eq(u, ring.one())) do_col(Op::dilate(Side::Col, t, unit_inv(ring, u)));
        internal_check(ring.eq(D.at(t, t), canonical), "diagonal normalization failed");
        diagonal.push_back(canonical);
    }

    // The working matrix must now be in Smith Normal Form.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool on_diag = i == j && i < rank;
            internal_check(on_diag != ring.is_zero(D.at(i, j)),
                           "SND engine left a non-SNF matrix");
        }
    for (std::size_t t = 0; t + 1 < rank; ++t)
        internal_check(divides(ring, diagonal[t], diagonal[t + 1]),
                       "SND divisibility chain violated");

    return SndResult<R>{std::move(U), std::move(D), std::move(V), rank, std::move(diagonal)};
}

template <EuclideanRing R>
SndResult<R> snd(const Matrix<R>& A) {
    return snd_observed(A, SndObserverNoop{});
}

// Checks the full decomposition contract: shapes, A*V = U*D, D in Smith
// Normal Form with canonical diagonal and divisibility chain, and U, V
// invertible (their own SNF is the identity up to units).
template <EuclideanRing R>
bool verify_snd(const Matrix<R>& A, const SndResult<R>& res) {
    const R& ring = A.ring();
    const std::size_t m = A.rows(), n = A.cols();
    if (res.U.rows() != m || res.U.cols() != m) return false;
    if (res.D.rows() != m || res.D.cols() != n) return false;
    if (res.V.rows() != n || res.V.cols() != n) return false;
    if (res.rank > std::min(m, n) || res.diagonal.size() != res.rank) return false;

    if (!(mat_mul(A, res.V) == mat_mul(res.U, res.D))) return false;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool on_diag = i == j && i < res.rank;
            if (on_diag) {
                if (!ring.eq(res.D.at(i, j), res.diagonal[i])) return false;
            } else if (!ring.is_zero(res.D.at(i, j))) {
                return false;
            }
        }
    for (const auto& d : res.diagonal) {
        if (ring.is_zero(d)) return false;
        auto [u, c] = ring.unit_normalize(d);
        if (!ring.eq(u, ring.one()) || !ring.eq(c, d)) return false;
    }
    for (std::size_t t = 0; t + 1 < res.rank; ++t)
        if (!divides(ring, res.diagonal[t], res.diagonal[t + 1])) return false;

    auto invertible = [&](const Matrix<R>& M) {
        if (M.rows() != M.cols()) return false;
        auto s = snd(M);
        if (s.rank != M.rows()) return false;
        return std::all_of(s.diagonal.begin(), s.diagonal.end(),
                           [&](const auto& d) { return ring.is_unit(d); });
    };
    return invertible(res.U) && invertible(res.V);
}

// Columns rank..n-1 of V: coordinates of a kernel basis in the domain's
// original basis.
template <EuclideanRing R>
std::vector<std::vector<typename R::Elem>> kernel_columns(const SndResult<R>& res) {
    std::vector<std::vector<typename R::Elem>> out;
    const std::size_t n = res.V.cols();
    for (std::size_t c = res.rank; c < n; ++c) {
        std::vector<typename R::Elem> col;
        col.reserve(n);
        for (std::size_t i = 0; i < n; ++i) col.push_back(res.V.at(i, c));
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace pershom
