#pragma once

// Persistent homology of a filtration over a field: graded invariant factor
// decomposition of H_n and its barcode with cycle representatives.
//
// Pipeline per dimension n:
//   - graded SND of the boundary matrices d_n and d_{n+1};
//   - torsion summands read off d_{n+1}: diagonal x^t with generator degree
//     s (the new row degree) contributes Torsion(s, t) when t > 0, and its
//     generator chain is the corresponding column of U; unit factors (t = 0)
//     are dropped but their degrees still participate in the bookkeeping;
//   - free summands (essential classes) by two independent procedures whose
//     agreement is asserted on every run:
//       (a) multiset difference: kernel-basis degrees of d_n minus all
//           torsion-generator degrees (units included);
//       (b) greedy membership: kernel columns in ascending degree, accepted
//           iff not in the field-span of the torsion generators born so far
//           plus the previously accepted columns.
//   - intervals: Torsion(s, t) -> [s, s+t), Free(s) -> [s, inf).
//
// Every barcode computation also asserts boundary-of-boundary = 0 and the
// Euler characteristic identity at every index; violations are internal
// errors, never silent.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pershom/filtration.hpp"
#include "pershom/interval.hpp"
#include "pershom/linalg.hpp"

namespace pershom {

// A chain over the field on the simplices of the ambient complex; zero
// coefficients are never stored.
template <FieldRing F>
using Chain = std::map<Simplex, typename F::Elem>;

template <FieldRing F>
bool chain_equal(const F& field, const Chain<F>& a, const Chain<F>& b) {
    if (a.size() != b.size()) return false;
    auto ib = b.begin();
    for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first || !field.eq(ia->second, ib->second)) return false;
    return true;
}

template <FieldRing F>
bool chain_less(const F& field, const Chain<F>& a, const Chain<F>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        const auto sa = field.to_string(ia->second);
        const auto sb = field.to_string(ib->second);
        if (sa != sb) return sa < sb;
    }
    return ib != b.end();
}

struct GradedIfdSummand {
    enum class Kind { Free, Torsion };
    Kind kind = Kind::Free;
    unsigned shift = 0;     // degree of the homogeneous generator
    unsigned exponent = 0;  // torsion: x^exponent annihilates, > 0; free: 0

    bool operator==(const GradedIfdSummand&) const = default;
};

template <FieldRing F>
struct Bar {
    std::size_t dim = 0;
    Interval interval;
    Chain<F> representative;  // homogeneous cycle of degree interval.birth
};

template <FieldRing F>
struct Barcode {
    F field;
    std::vector<Bar<F>> bars;  // sorted by (dim, birth, death, representative)

    std::vector<Bar<F>> bars_of_dim(std::size_t n) const {
        std::vector<Bar<F>> out;
        for (const auto& b : bars)
            if (b.dim == n) out.push_back(b);
        return out;
    }
};

template <FieldRing F>
bool barcode_equal(const Barcode<F>& a, const Barcode<F>& b) {
    if (a.bars.size() != b.bars.size()) return false;
    for (std::size_t k = 0; k < a.bars.size(); ++k) {
        const auto& x = a.bars[k];
        const auto& y = b.bars[k];
        if (x.dim != y.dim || !(x.interval == y.interval) ||
            !chain_equal(a.field, x.representative, y.representative))
            return false;
    }
    return true;
}

namespace detail {

// Field coefficient vector of a homogeneous polynomial column: entry i of
// the column is c_i x^(deg - basis_deg_i); the vector collects the c_i.
template <FieldRing F>
std::vector<typename F::Elem> homogeneous_column_to_field_vector(
    const PolynomialRing<F>& ring, const std::vector<typename PolynomialRing<F>::Elem>& col) {
    const auto& field = ring.coefficient_field();
    std::vector<typename F::Elem> out;
    out.reserve(col.size());
    for (const auto& e : col) {
        if (ring.is_zero(e)) {
            out.push_back(field.zero());
            continue;
        }
        internal_check(ring.degh(e).has_value(),
                       "homogeneous column has a non-monomial entry");
        out.push_back(ring.leading_coeff(e));
    }
    return out;
}

template <FieldRing F>
Chain<F> field_vector_to_chain(const F& field, const GradedChainBasis& basis,
                               const std::vector<typename F::Elem>& vec) {
    internal_check(vec.size() == basis.entries.size(), "chain vector does not match basis");
    Chain<F> chain;
    for (std::size_t i = 0; i < vec.size(); ++i)
        if (!field.is_zero(vec[i])) chain.emplace(basis.entries[i].first, vec[i]);
    return chain;
}

template <FieldRing F>
struct DimensionAnalysis {
    std::vector<GradedIfdSummand> summands;
    std::vector<Bar<F>> bars;
};

inline bool summand_less(const GradedIfdSummand& a, const GradedIfdSummand& b) {
    if (a.shift != b.shift) return a.shift < b.shift;
    if (a.kind != b.kind) return a.kind == GradedIfdSummand::Kind::Free;
    return a.exponent < b.exponent;
}

template <FieldRing F>
DimensionAnalysis<F> analyze_dimension(const Filtration& filt, std::size_t n, const F& field) {
    PolynomialRing<F> ring(field);
    const GradedChainBasis basis = graded_chain_basis(filt, n);
    const std::size_t m = basis.entries.size();

    const auto gs1 = graded_snd(graded_boundary_matrix(filt, n, field));
    const auto gs2 = graded_snd(graded_boundary_matrix(filt, n + 1, field));
    const std::size_t r2 = gs2.snd.rank;

    // Kernel basis of d_n as (field vector, degree).
    struct DegVec {
        unsigned degree;
        std::vector<typename F::Elem> vec;
    };
    std::vector<DegVec> kernel;
    for (auto& [col, degree] : graded_kernel_columns(gs1))
        kernel.push_back({degree, homogeneous_column_to_field_vector(ring, col)});
    std::stable_sort(kernel.begin(), kernel.end(),
                     [](const DegVec& a, const DegVec& b) { return a.degree < b.degree; });

    // Torsion generators: columns 0..r2-1 of U from d_{n+1}, with their
    // degrees and annihilator exponents.
    struct Generator {
        unsigned degree;    // s_j
        unsigned exponent;  // t_j, 0 for a unit factor
        std::vector<typename F::Elem> vec;
    };
    std::vector<Generator> generators;
    internal_check(gs2.snd.U.rows() == m, "graded decomposition shape mismatch");
    for (std::size_t j = 0; j < r2; ++j) {
        std::vector<typename PolynomialRing<F>::Elem> col;
        col.reserve(m);
        for (std::size_t i = 0; i < m; ++i) col.push_back(gs2.snd.U.at(i, j));
        auto t = ring.degh(gs2.snd.diagonal[j]);
        internal_check(t.has_value(), "graded SNF diagonal entry is not a monomial");
        generators.push_back(
            {gs2.new_row_degrees[j], *t, homogeneous_column_to_field_vector(ring, col)});
    }
    std::stable_sort(generators.begin(), generators.end(),
                     [](const Generator& a, const Generator& b) { return a.degree < b.degree; });

    // (a) Multiset difference: kernel degrees minus all generator degrees.
    std::multiset<unsigned> essential_degrees;
    for (const auto& k : kernel) essential_degrees.insert(k.degree);
    for (const auto& g : generators) {
        auto it = essential_degrees.find(g.degree);
        internal_check(it != essential_degrees.end(),
                       "torsion generator degree missing from the kernel degree multiset");
        essential_degrees.erase(it);
    }

    // (b) Greedy membership over growing spans.
    SpanSolver<F> span(field, m);
    std::vector<DegVec> accepted;
    std::size_t next_gen = 0;
    for (const auto& cand : kernel) {
        while (next_gen < generators.size() && generators[next_gen].degree <= cand.degree)
            span.insert(generators[next_gen++].vec);
        if (span.contains(cand.vec)) continue;
        span.insert(cand.vec);
        accepted.push_back(cand);
    }

    // The two essential-birth procedures must agree exactly.
    internal_check(kernel.size() >= r2 && accepted.size() == kernel.size() - r2,
                   "essential class count disagrees with rank bookkeeping");
    {
        std::multiset<unsigned> greedy_degrees;
        for (const auto& a : accepted) greedy_degrees.insert(a.degree);
        internal_check(greedy_degrees == essential_degrees,
                       "greedy essential births disagree with the multiset difference");
    }

    DimensionAnalysis<F> out;
    for (const auto& g : generators) {
        if (g.exponent == 0) continue;  // unit factor: trivial summand
        out.summands.push_back(
            {GradedIfdSummand::Kind::Torsion, g.degree, g.exponent});
        Bar<F> bar;
        bar.dim = n;
        bar.interval = Interval{g.degree, g.degree + g.exponent};
        bar.representative = field_vector_to_chain(field, basis, g.vec);
        out.bars.push_back(std::move(bar));
    }
    for (const auto& a : accepted) {
        out.summands.push_back({GradedIfdSummand::Kind::Free, a.degree, 0});
        Bar<F> bar;
        bar.dim = n;
        bar.interval = Interval{a.degree, std::nullopt};
        bar.representative = field_vector_to_chain(field, basis, a.vec);
        out.bars.push_back(std::move(bar));
    }
    std::sort(out.summands.begin(), out.summands.end(), summand_less);
    return out;
}

template <FieldRing F>
void sort_bars(const F& field, std::vector<Bar<F>>& bars) {
    std::sort(bars.begin(), bars.end(), [&](const Bar<F>& a, const Bar<F>& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (!(a.interval == b.interval)) return interval_less(a.interval, b.interval);
        return chain_less(field, a.representative, b.representative);
    });
}

}  // namespace detail

// Graded invariant factor decomposition of H_n, sorted by (shift, kind,
// exponent) with free summands first within a shift.
template <FieldRing F>
std::vector<GradedIfdSummand> graded_ifd(const Filtration& filt, std::size_t n, const F& field) {
    return detail::analyze_dimension(filt, n, field).summands;
}

// Bars of dimension n with representatives, sorted deterministically.
template <FieldRing F>
std::vector<Bar<F>> persistent_homology(const Filtration& filt, std::size_t n, const F& field) {
    auto analysis = detail::analyze_dimension(filt, n, field);
    detail::sort_bars(field, analysis.bars);
    return analysis.bars;
}

// Number of bars whose interval contains t.
template <FieldRing F>
std::size_t betti_at(const std::vector<Bar<F>>& bars, unsigned t) {
    std::size_t count = 0;
    for (const auto& b : bars)
        if (b.interval.contains(t)) ++count;
    return count;
}

// Number of bars whose interval contains [t, t+p].
template <FieldRing F>
std::size_t p_persistent_betti(const std::vector<Bar<F>>& bars, unsigned t, unsigned p) {
    std::size_t count = 0;
    for (const auto& b : bars)
        if (b.interval.contains_range(t, t + p)) ++count;
    return count;
}

// Full barcode.  All dimensions of the complex are always computed so the
// Euler identity can be checked; max_dim only filters the returned bars
// (default: the dimension of the complex).
template <FieldRing F>
Barcode<F> barcode(const Filtration& filt, const F& field,
                   std::optional<std::size_t> max_dim = std::nullopt) {
    const int dim_k = filt.complex.dim();
    Barcode<F> out{field, {}};

    std::vector<std::vector<Bar<F>>> per_dim;
    for (int n = 0; n <= dim_k; ++n) {
        // Boundary of boundary must vanish (as graded matrices over F[x]).
        const auto Gn = graded_boundary_matrix(filt, static_cast<std::size_t>(n), field);
        const auto Gn1 = graded_boundary_matrix(filt, static_cast<std::size_t>(n) + 1, field);
        internal_check(is_zero_matrix(mat_mul(Gn.base, Gn1.base)),
                       "boundary of boundary is nonzero");
        per_dim.push_back(
            persistent_homology(filt, static_cast<std::size_t>(n), field));
    }

    // Euler identity at every index of the filtration.
    for (unsigned t = 0; t <= filt.horizon && dim_k >= 0; ++t) {
        long lhs = 0, rhs = 0;
        for (int n = 0; n <= dim_k; ++n) {
            const long sign = n % 2 == 0 ? 1 : -1;
            lhs += sign * static_cast<long>(betti_at(per_dim[static_cast<std::size_t>(n)], t));
        }
        for (const auto& [s, birth] : filt.birth)
            if (birth <= t) rhs += s.size() % 2 == 1 ? 1 : -1;
        internal_check(lhs == rhs, "Euler characteristic mismatch at index " + std::to_string(t));
    }

    for (int n = 0; n <= dim_k; ++n) {
        if (max_dim && static_cast<std::size_t>(n) > *max_dim) continue;
        auto& bars = per_dim[static_cast<std::size_t>(n)];
        out.bars.insert(out.bars.end(), std::make_move_iterator(bars.begin()),
                        std::make_move_iterator(bars.end()));
    }
    detail::sort_bars(field, out.bars);
    return out;
}

// Representative contract for a list of bars in dimension n: each chain is
// supported in K_birth, is a cycle of d_n there, and (finite bars) becomes a
// boundary at the death index but not before; essential bars never become
// boundaries.  InternalError on any violation.
template <FieldRing F>
void verify_representatives(const Filtration& filt, std::size_t n, const F& field,
                            const std::vector<Bar<F>>& bars) {
    const GradedChainBasis basis = graded_chain_basis(filt, n);
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < basis.entries.size(); ++i)
        index.emplace(basis.entries[i].first, i);

    const auto next_basis = graded_chain_basis(filt, n + 1);

    // Boundary image at index t, as a span of field vectors in C_n coords.
    auto boundary_span_at = [&](unsigned t) {
        SpanSolver<F> span(field, basis.entries.size());
        for (const auto& [tau, birth] : next_basis.entries) {
            if (birth > t) continue;
            std::vector<typename F::Elem> vec(basis.entries.size(), field.zero());
            auto sign = field.one();
            for (const auto& f : facets(tau)) {
                auto it = index.find(f);
                internal_check(it != index.end(), "facet missing from chain basis");
                vec[it->second] = field.add(vec[it->second], sign);
                sign = field.negate(sign);
            }
            span.insert(vec);
        }
        return span;
    };

    for (const auto& bar : bars) {
        internal_check(bar.dim == n, "bar dimension does not match the checked dimension");
        internal_check(!bar.representative.empty(), "bar carries no representative");

        // Supported in K_birth.
        for (const auto& [s, c] : bar.representative) {
            internal_check(!field.is_zero(c), "representative stores a zero coefficient");
            internal_check(filt.birth_of(s) <= bar.interval.birth,
                           "representative uses a simplex born after the bar's birth");
            internal_check(simplex_dim(s) == n, "representative mixes dimensions");
        }

        // Cycle: the boundary of the chain vanishes.
        Chain<F> boundary;
        for (const auto& [s, c] : bar.representative) {
            auto sign = field.one();
            for (const auto& f : facets(s)) {
                auto [it, fresh] = boundary.emplace(f, field.zero());
                it->second = field.add(it->second, field.mul(sign, c));
                sign = field.negate(sign);
            }
        }
        for (const auto& [f, c] : boundary)
            internal_check(field.is_zero(c), "representative is not a cycle");

        std::vector<typename F::Elem> vec(basis.entries.size(), field.zero());
        for (const auto& [s, c] : bar.representative) vec[index.at(s)] = c;

        if (bar.interval.death) {
            const unsigned d = *bar.interval.death;
            internal_check(boundary_span_at(d).contains(vec),
                           "representative is not a boundary at its death index");
            internal_check(!boundary_span_at(d - 1).contains(vec),
                           "representative is already a boundary before its death index");
        } else {
            internal_check(!boundary_span_at(filt.horizon).contains(vec),
                           "essential representative becomes a boundary");
        }
    }
}

}  // namespace pershom
