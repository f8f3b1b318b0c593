#pragma once

// Finite-type persistence modules over a field as explicit pointwise data:
// dimensions per index plus consecutive structure matrices, interpreted as
// constant (identity maps) beyond the horizon T.
//
// This is the brute-force oracle used to validate barcodes independently of
// the Smith-decomposition pipeline: from_filtration builds H_n(K_t; F) at
// every index by plain Gaussian elimination in the chain coordinates of the
// final complex, and check_interval_decomposition tests the rank fingerprint
// rank(alpha_{s,t}) = #{J : [t, s] subset of J} that characterizes interval
// decompositions.  Only ranks are contractually meaningful; the homology
// bases themselves are free choices.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pershom/filtration.hpp"
#include "pershom/interval.hpp"
#include "pershom/linalg.hpp"

namespace pershom {

template <FieldRing F>
struct FiniteTypePersMod {
    F field;
    unsigned horizon = 0;                   // T; identity maps from T on
    std::vector<std::size_t> dims;          // T+1 entries: dim V_t
    std::vector<Matrix<F>> structure_maps;  // T maps; maps[t]: dims[t+1] x dims[t]
};

template <FieldRing F>
void validate_persmod(const FiniteTypePersMod<F>& M) {
    validate(M.dims.size() == static_cast<std::size_t>(M.horizon) + 1,
             "persistence module needs horizon+1 dimensions");
    validate(M.structure_maps.size() == M.horizon,
             "persistence module needs horizon structure maps");
    for (unsigned t = 0; t < M.horizon; ++t)
        validate(M.structure_maps[t].rows() == M.dims[t + 1] &&
                     M.structure_maps[t].cols() == M.dims[t],
                 "structure map " + std::to_string(t) + " has the wrong shape");
}

template <FieldRing F>
FiniteTypePersMod<F> zero_module(const F& field, unsigned horizon) {
    FiniteTypePersMod<F> out{field, horizon,
                             std::vector<std::size_t>(static_cast<std::size_t>(horizon) + 1, 0),
                             {}};
    for (unsigned t = 0; t < horizon; ++t) out.structure_maps.emplace_back(field, 0, 0);
    return out;
}

// The interval module F_J up to at least index T; the horizon is extended
// automatically when J requires it (the module must be constant beyond the
// horizon).
template <FieldRing F>
FiniteTypePersMod<F> interval_module(const F& field, const Interval& J, unsigned horizon) {
    validate_interval(J);
    unsigned T = std::max(horizon, J.death ? *J.death : J.birth);
    FiniteTypePersMod<F> out{field, T, {}, {}};
    for (unsigned t = 0; t <= T; ++t) out.dims.push_back(J.contains(t) ? 1 : 0);
    for (unsigned t = 0; t < T; ++t) {
        Matrix<F> m(field, out.dims[t + 1], out.dims[t]);
        if (J.contains(t) && J.contains(t + 1)) m.at(0, 0) = field.one();
        out.structure_maps.push_back(std::move(m));
    }
    return out;
}

namespace detail {

template <FieldRing F>
std::size_t dims_at(const FiniteTypePersMod<F>& M, unsigned t) {
    return M.dims[std::min(t, M.horizon)];
}

template <FieldRing F>
Matrix<F> structure_map_at(const FiniteTypePersMod<F>& M, unsigned t) {
    if (t < M.horizon) return M.structure_maps[t];
    return Matrix<F>::identity(M.field, M.dims[M.horizon]);
}

}  // namespace detail

// Direct sum; the shorter module is padded with identity maps (it is
// constant beyond its horizon).
template <FieldRing F>
FiniteTypePersMod<F> direct_sum(const FiniteTypePersMod<F>& A, const FiniteTypePersMod<F>& B) {
    validate_persmod(A);
    validate_persmod(B);
    const unsigned T = std::max(A.horizon, B.horizon);
    FiniteTypePersMod<F> out{A.field, T, {}, {}};
    for (unsigned t = 0; t <= T; ++t)
        out.dims.push_back(detail::dims_at(A, t) + detail::dims_at(B, t));
    for (unsigned t = 0; t < T; ++t) {
        const auto ma = detail::structure_map_at(A, t);
        const auto mb = detail::structure_map_at(B, t);
        Matrix<F> m(A.field, out.dims[t + 1], out.dims[t]);
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        for (std::size_t i = 0; i < mb.rows(); ++i)
            for (std::size_t j = 0; j < mb.cols(); ++j)
                m.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
        out.structure_maps.push_back(std::move(m));
    }
    return out;
}

// Rank of the composed map V_t -> V_s (t <= s), with indices clamped to the
// horizon where the module is constant.
template <FieldRing F>
std::size_t rank_map(const FiniteTypePersMod<F>& M, unsigned t, unsigned s) {
    validate(t <= s, "rank_map requires t <= s");
    const unsigned t0 = std::min(t, M.horizon);
    const unsigned s0 = std::min(s, M.horizon);
    Matrix<F> P = Matrix<F>::identity(M.field, M.dims[t0]);
    for (unsigned u = t0; u < s0; ++u) P = mat_mul(M.structure_maps[u], P);
    return field_rank(P);
}

namespace detail {

// Shared scaffolding for the oracle: cycle and boundary spaces of the
// filtration at every index, in the chain coordinates of the final complex.
template <FieldRing F>
struct FiltrationSlices {
    std::size_t ambient = 0;                             // #n-simplices of K_T
    std::vector<unsigned> col_birth_n, col_birth_n1;     // per static basis column
    Matrix<F> boundary_n, boundary_n1;

    FiltrationSlices(const Filtration& filt, std::size_t n, const F& field)
        : boundary_n(boundary_matrix(field, filt.complex, n)),
          boundary_n1(boundary_matrix(field, filt.complex, n + 1)) {
        const auto basis_n = filt.complex.simplices_of_dim(n);
        const auto basis_n1 = filt.complex.simplices_of_dim(n + 1);
        ambient = basis_n.size();
        for (const auto& s : basis_n) col_birth_n.push_back(filt.birth_of(s));
        for (const auto& s : basis_n1) col_birth_n1.push_back(filt.birth_of(s));
    }

    // Basis of the cycle space Z_t, scattered into ambient coordinates.
    std::vector<std::vector<typename F::Elem>> cycles_at(unsigned t) const {
        const F& field = boundary_n.ring();
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < col_birth_n.size(); ++j)
            if (col_birth_n[j] <= t) cols.push_back(j);
        Matrix<F> sub(field, boundary_n.rows(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < boundary_n.rows(); ++i)
                sub.at(i, j) = boundary_n.at(i, cols[j]);
        std::vector<std::vector<typename F::Elem>> out;
        for (const auto& k : field_kernel_basis(sub)) {
            std::vector<typename F::Elem> v(ambient, field.zero());
            for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
            out.push_back(std::move(v));
        }
        return out;
    }

    // Boundary generators at index t: columns of d_{n+1} born by t.
    std::vector<std::vector<typename F::Elem>> boundaries_at(unsigned t) const {
        std::vector<std::vector<typename F::Elem>> out;
        for (std::size_t j = 0; j < col_birth_n1.size(); ++j)
            if (col_birth_n1[j] <= t) out.push_back(matrix_column(boundary_n1, j));
        return out;
    }
};

}  // namespace detail

// H_n(K_t; F) at every index by Gaussian elimination, with structure maps on
// homology bases chosen by echelon extension of the boundary space to the
// cycle space.  Only the ranks of the maps are contractual.
template <FieldRing F>
FiniteTypePersMod<F> from_filtration(const Filtration& filt, std::size_t n, const F& field) {
    const unsigned T = filt.horizon;
    detail::FiltrationSlices<F> slices(filt, n, field);

    FiniteTypePersMod<F> out{field, T, {}, {}};
    std::vector<std::vector<std::vector<typename F::Elem>>> reps(T + 1);
    for (unsigned t = 0; t <= T; ++t) {
        SpanSolver<F> span(field, slices.ambient);
        std::size_t boundary_rank = 0;
        for (const auto& b : slices.boundaries_at(t))
            if (span.insert(b)) ++boundary_rank;
        const auto cycles = slices.cycles_at(t);
        for (const auto& z : cycles)
            if (span.insert(z)) reps[t].push_back(z);
        internal_check(reps[t].size() == cycles.size() - boundary_rank,
                       "cycle/boundary rank bookkeeping failed");
        out.dims.push_back(reps[t].size());
    }

    for (unsigned t = 0; t < T; ++t) {
        SpanSolver<F> span(field, slices.ambient);
        const auto boundaries = slices.boundaries_at(t + 1);
        for (const auto& b : boundaries) span.insert(b);
        const std::size_t n_boundary = boundaries.size();
        for (const auto& r : reps[t + 1]) {
            const bool fresh = span.insert(r);
            internal_check(fresh, "homology representative is not independent");
        }
        Matrix<F> m(field, out.dims[t + 1], out.dims[t]);
        for (std::size_t i = 0; i < reps[t].size(); ++i) {
            auto x = span.solve(reps[t][i]);
            internal_check(x.has_value(), "cycle does not persist into the next index");
            for (std::size_t j = 0; j < reps[t + 1].size(); ++j)
                m.at(j, i) = (*x)[n_boundary + j];
        }
        out.structure_maps.push_back(std::move(m));
    }
    validate_persmod(out);
    return out;
}

// Independent rank route for the induced map H_n(K_t) -> H_n(K_s), t <= s:
// rank [Z_t | B_s] - rank B_s, bypassing the structure matrices entirely.
template <FieldRing F>
std::size_t rank_inclusion(const Filtration& filt, std::size_t n, const F& field, unsigned t,
                           unsigned s) {
    validate(t <= s, "rank_inclusion requires t <= s");
    detail::FiltrationSlices<F> slices(filt, n, field);
    SpanSolver<F> span(field, slices.ambient);
    for (const auto& b : slices.boundaries_at(s)) span.insert(b);
    const std::size_t boundary_rank = span.rank();
    for (const auto& z : slices.cycles_at(t)) span.insert(z);
    return span.rank() - boundary_rank;
}

// True iff the module has exactly the rank fingerprint of the direct sum of
// the given interval modules: rank(alpha_{s,t}) = #{J : [t, s] subset J} for
// all 0 <= t <= s up to a window covering the horizon and every interval
// endpoint.
template <FieldRing F>
bool check_interval_decomposition(const FiniteTypePersMod<F>& M,
                                  const std::vector<Interval>& intervals) {
    validate_persmod(M);
    for (const auto& j : intervals) validate_interval(j);
    unsigned S = M.horizon;
    for (const auto& j : intervals) {
        S = std::max(S, j.birth);
        if (j.death) S = std::max(S, *j.death);
    }
    for (unsigned t = 0; t <= S; ++t)
        for (unsigned s = t; s <= S; ++s) {
            std::size_t count = 0;
            for (const auto& j : intervals)
                if (j.contains_range(t, s)) ++count;
            if (rank_map(M, t, s) != count) return false;
        }
    return true;
}

}  // namespace pershom
