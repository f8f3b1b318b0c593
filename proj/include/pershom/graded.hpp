#pragma once

// Graded matrices over F[x] and the graded Smith Normal Decomposition.
//
// A graded matrix carries degree labels for its codomain basis (rows) and
// domain basis (columns); every nonzero entry e(j, i) must be homogeneous
// (a monomial) with degh(e(j, i)) = col_degrees[i] - row_degrees[j].
//
// Elementary operations arising in the reduction preserve this shape: the
// multipliers are quotients of homogeneous entries, so transvections and
// dilations leave the degree labels unchanged while swaps permute them.
// graded_snd runs the generic SND engine, tracks the labels through every
// operation, and (checking enabled by default) re-verifies the invariant
// after each step; a violation raises InternalError, since a valid input
// can never trigger one.  The final labels are returned as
// new_row_degrees / new_col_degrees: the degrees of the homogeneous bases
// given by the columns of U and V.
//
// Because the rule picks a pivot of minimal homogeneous degree, every
// division in the graded reduction is exact and the plain engine never
// needs its remainder or divisibility-repair paths on graded input.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pershom/poly.hpp"
#include "pershom/snd.hpp"

namespace pershom {

template <FieldRing F>
struct GradedMatrix {
    Matrix<PolynomialRing<F>> base;
    std::vector<unsigned> row_degrees;  // codomain basis degrees
    std::vector<unsigned> col_degrees;  // domain basis degrees
};

// Empty result when the labelled matrix satisfies the graded-entry
// invariant; otherwise a description of the first defect.
template <FieldRing F>
std::optional<std::string> graded_defect(const Matrix<PolynomialRing<F>>& M,
                                         const std::vector<unsigned>& row_degrees,
                                         const std::vector<unsigned>& col_degrees) {
    const auto& ring = M.ring();
    if (row_degrees.size() != M.rows()) return "row degree count does not match row count";
    if (col_degrees.size() != M.cols()) return "column degree count does not match column count";
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const auto& e = M.at(i, j);
            if (ring.is_zero(e)) continue;
            auto where = "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") = " +
                         ring.to_string(e);
            auto dh = ring.degh(e);
            if (!dh) return where + " is not homogeneous";
            if (col_degrees[j] < row_degrees[i])
                return where + " is nonzero but its column degree " +
                       std::to_string(col_degrees[j]) + " is below its row degree " +
                       std::to_string(row_degrees[i]);
            if (*dh != col_degrees[j] - row_degrees[i])
                return where + " has degree " + std::to_string(*dh) + ", expected " +
                       std::to_string(col_degrees[j] - row_degrees[i]);
        }
    return std::nullopt;
}

// ValidationError if G violates the graded-entry invariant.
template <FieldRing F>
void validate_graded(const GradedMatrix<F>& G) {
    if (auto defect = graded_defect(G.base, G.row_degrees, G.col_degrees))
        throw ValidationError("invalid graded matrix: " + *defect);
}

template <FieldRing F>
struct GradedSndResult {
    SndResult<PolynomialRing<F>> snd;
    std::vector<unsigned> new_row_degrees;  // degrees of the basis in U's columns
    std::vector<unsigned> new_col_degrees;  // degrees of the basis in V's columns
};

struct GradedSndStats {
    std::size_t steps_checked = 0;
};

template <FieldRing F>
GradedSndResult<F> graded_snd(const GradedMatrix<F>& G, GradedSndStats* stats = nullptr,
                              bool check_steps = true) {
    using PR = PolynomialRing<F>;
    using Op = ElementaryOp<PR>;
    validate_graded(G);
    const PR ring = G.base.ring();

    std::vector<unsigned> row_deg = G.row_degrees;
    std::vector<unsigned> col_deg = G.col_degrees;

    auto observer = [&](const Op& op, const Matrix<PR>& D_now) {
        if (const auto* sw = std::get_if<typename Op::Swap>(&op.kind)) {
            auto& labels = op.side == Side::Row ? row_deg : col_deg;
            std::swap(labels[sw->k1], labels[sw->k2]);
        }
        if (check_steps) {
            if (auto defect = graded_defect(D_now, row_deg, col_deg))
                throw InternalError("graded reduction step broke homogeneity: " + *defect);
            if (stats) ++stats->steps_checked;
        }
    };

    auto res = snd_observed(G.base, observer);

    // The diagonal must consist of canonical (monic) monomials x^t.
    for (std::size_t t = 0; t < res.rank; ++t) {
        const auto& d = res.diagonal[t];
        auto dh = ring.degh(d);
        internal_check(dh.has_value() &&
                           ring.coefficient_field().eq(ring.leading_coeff(d),
                                                       ring.coefficient_field().one()),
                       "graded SNF diagonal entry is not a monic monomial");
        internal_check(col_deg[t] >= row_deg[t] && *dh == col_deg[t] - row_deg[t],
                       "graded SNF diagonal entry degree disagrees with its labels");
    }

    // U's columns express the new codomain basis in the old one; each must
    // be degree-consistent with its label, and likewise for V.
    auto check_basis = [&](const Matrix<PR>& B, const std::vector<unsigned>& old_deg,
                           const std::vector<unsigned>& new_deg, const char* which) {
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j) {
                const auto& e = B.at(i, j);
                if (ring.is_zero(e)) continue;
                auto dh = ring.degh(e);
                internal_check(dh.has_value() && new_deg[j] >= old_deg[i] &&
                                   *dh == new_deg[j] - old_deg[i],
                               std::string("graded SND basis matrix ") + which +
                                   " is not degree-consistent");
            }
    };
    check_basis(res.U, G.row_degrees, row_deg, "U");
    check_basis(res.V, G.col_degrees, col_deg, "V");

    return GradedSndResult<F>{std::move(res), std::move(row_deg), std::move(col_deg)};
}

// Kernel basis columns of a graded decomposition, each paired with its
// homogeneous degree.
template <FieldRing F>
std::vector<std::pair<std::vector<typename PolynomialRing<F>::Elem>, unsigned>>
graded_kernel_columns(const GradedSndResult<F>& res) {
    std::vector<std::pair<std::vector<typename PolynomialRing<F>::Elem>, unsigned>> out;
    auto cols = kernel_columns(res.snd);
    for (std::size_t k = 0; k < cols.size(); ++k)
        out.emplace_back(std::move(cols[k]), res.new_col_degrees[res.snd.rank + k]);
    return out;
}

}  // namespace pershom
