#pragma once

// Filtrations of a finite simplicial complex indexed by the naturals, the
// graded chain bases they induce, and the graded boundary matrices feeding
// the persistence pipeline.
//
// A filtration is the final complex plus a birth time per simplex with
// birth(face) <= birth(simplex); K_t is everything born at or before t and
// the filtration is constant from the horizon T = max birth on.
//
// The graded basis of dimension n lists (simplex, birth) sorted by birth
// ascending and then lexicographically; this makes pivot degrees monotone
// and output deterministic.  In the graded boundary matrix the entry for
// facet tau (birth u) of sigma (birth t) is the boundary sign times x^(t-u).

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pershom/graded.hpp"
#include "pershom/simplicial.hpp"

namespace pershom {

struct Filtration {
    SimplicialComplex complex;          // the final complex K_T
    std::map<Simplex, unsigned> birth;  // defined on every simplex of the complex
    unsigned horizon = 0;               // T = max birth (0 when empty)

    unsigned birth_of(const Simplex& s) const {
        auto it = birth.find(s);
        internal_check(it != birth.end(), "simplex has no birth time");
        return it->second;
    }
};

enum class DuplicatePolicy { Strict, Lenient };

struct FiltrationWarnings {
    std::vector<std::string> messages;
};

// Builds a filtration from (birth, simplex) events.  A simplex listed twice
// is an error under Strict; under Lenient the minimum birth wins and a
// warning is recorded.  The assembled data must be face-closed with
// monotone births; violations name the offending simplex.
inline Filtration from_events(const std::vector<std::pair<unsigned, Simplex>>& events,
                              DuplicatePolicy policy = DuplicatePolicy::Strict,
                              FiltrationWarnings* warnings = nullptr) {
    Filtration out;
    for (const auto& [t, s] : events) {
        validate(simplex_well_formed(s),
                 "simplex " + simplex_ids_to_string(s) + " is not strictly ascending");
        auto [it, fresh] = out.birth.emplace(s, t);
        if (fresh) continue;
        validate(policy == DuplicatePolicy::Lenient,
                 "duplicate simplex " + simplex_ids_to_string(s) + " in filtration events");
        if (warnings)
            warnings->messages.push_back("duplicate simplex " + simplex_ids_to_string(s) +
                                         ": keeping the earlier birth " +
                                         std::to_string(std::min(it->second, t)));
        it->second = std::min(it->second, t);
    }

    SimplexSet simplices;
    for (const auto& [s, t] : out.birth) {
        simplices.insert(s);
        out.horizon = std::max(out.horizon, t);
    }
    for (const auto& [s, t] : out.birth)
        for (const auto& f : facets(s)) {
            auto it = out.birth.find(f);
            validate(it != out.birth.end(), "filtration is not closed: simplex " +
                                                simplex_ids_to_string(s) + " is born but its face " +
                                                simplex_ids_to_string(f) + " never is");
            validate(it->second <= t, "filtration births are not monotone: face " +
                                          simplex_ids_to_string(f) + " (birth " +
                                          std::to_string(it->second) + ") is born after " +
                                          simplex_ids_to_string(s) + " (birth " +
                                          std::to_string(t) + ")");
        }
    out.complex = SimplicialComplex{std::move(simplices)};
    return out;
}

// K_t: the subcomplex born at or before t (t >= T gives the full complex).
inline SimplicialComplex complex_at(const Filtration& filt, unsigned t) {
    SimplexSet simplices;
    for (const auto& [s, u] : filt.birth)
        if (u <= t) simplices.insert(s);
    return SimplicialComplex{std::move(simplices)};
}

struct GradedChainBasis {
    std::size_t n = 0;
    std::vector<std::pair<Simplex, unsigned>> entries;  // (simplex, birth)
};

// Basis of the graded chain module in dimension n: births ascending,
// lexicographic within a birth.
inline GradedChainBasis graded_chain_basis(const Filtration& filt, std::size_t n) {
    GradedChainBasis basis;
    basis.n = n;
    for (const auto& s : filt.complex.simplices_of_dim(n))
        basis.entries.emplace_back(s, filt.birth_of(s));
    std::stable_sort(basis.entries.begin(), basis.entries.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    return basis;
}

template <FieldRing F>
GradedMatrix<F> graded_boundary_matrix(const Filtration& filt, std::size_t n, const F& field) {
    PolynomialRing<F> ring(field);
    const GradedChainBasis col_basis = graded_chain_basis(filt, n);
    const GradedChainBasis row_basis =
        n == 0 ? GradedChainBasis{} : graded_chain_basis(filt, n - 1);

    std::map<Simplex, std::size_t> row_index;
    std::vector<unsigned> row_deg, col_deg;
    for (std::size_t i = 0; i < row_basis.entries.size(); ++i) {
        row_index.emplace(row_basis.entries[i].first, i);
        row_deg.push_back(row_basis.entries[i].second);
    }
    for (const auto& [s, t] : col_basis.entries) col_deg.push_back(t);

    Matrix<PolynomialRing<F>> M(ring, row_deg.size(), col_deg.size());
    for (std::size_t j = 0; j < col_basis.entries.size(); ++j) {
        const auto& [sigma, t] = col_basis.entries[j];
        if (n == 0) continue;
        auto coeff = field.one();
        for (const auto& f : facets(sigma)) {
            auto it = row_index.find(f);
            internal_check(it != row_index.end(), "boundary facet missing from filtration");
            const unsigned u = row_deg[it->second];
            internal_check(u <= t, "facet born after its coface");
            M.at(it->second, j) = ring.monomial(coeff, t - u);
            coeff = field.negate(coeff);
        }
    }
    GradedMatrix<F> G{std::move(M), std::move(row_deg), std::move(col_deg)};
    validate_graded(G);
    return G;
}

struct NamedFiltration {
    VertexOrder order;
    Filtration filt;
};

// Filtration text format: optional `@order v1 v2 ...` first line, then one
// event per line `t v0 v1 ... vk`; `#` starts a comment.  Without @order the
// orientation is the lexicographic order of all vertex tokens that appear.
inline NamedFiltration parse_filtration_text(std::string_view text,
                                             DuplicatePolicy policy = DuplicatePolicy::Strict,
                                             FiltrationWarnings* warnings = nullptr) {
    auto lines = tokenize_lines(text);
    VertexOrder order;
    std::size_t first_body = 0;
    if (!lines.empty() && lines[0].tokens[0] == "@order") {
        order = VertexOrder::from_names(
            std::vector<std::string>(lines[0].tokens.begin() + 1, lines[0].tokens.end()),
            lines[0].number);
        first_body = 1;
    } else {
        std::set<std::string> seen;
        for (const auto& line : lines) {
            validate(line.tokens[0] != "@order", at_line(line.number) +
                                                     "@order is only allowed as the first "
                                                     "non-comment line");
            validate(line.tokens.size() >= 2,
                     at_line(line.number) + "expected `t v0 v1 ...`, got fewer tokens");
            for (std::size_t k = 1; k < line.tokens.size(); ++k) seen.insert(line.tokens[k]);
        }
        order = VertexOrder::from_names({seen.begin(), seen.end()}, 0);
    }

    std::vector<std::pair<unsigned, Simplex>> events;
    for (std::size_t k = first_body; k < lines.size(); ++k) {
        const auto& line = lines[k];
        validate(line.tokens[0] != "@order",
                 at_line(line.number) + "@order is only allowed as the first non-comment line");
        validate(line.tokens.size() >= 2,
                 at_line(line.number) + "expected `t v0 v1 ...`, got fewer tokens");
        auto t = parse_natural(line.tokens[0]);
        validate(t.has_value(),
                 at_line(line.number) + "birth time '" + line.tokens[0] + "' is not a natural");
        events.emplace_back(
            *t, simplex_from_tokens(
                    order, std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()),
                    line.number));
    }
    return NamedFiltration{std::move(order), from_events(events, policy, warnings)};
}

}  // namespace pershom
