#pragma once

// Finite abstract simplicial complexes with an oriented (totally ordered)
// vertex set.
//
// Vertices are dense ids 0..V-1; the id order is the orientation.  A Simplex
// is its strictly ascending vertex id tuple, so every simplex is stored in
// the canonical oriented form and no sign corrections are needed beyond the
// alternating boundary formula.  Named vertices (text files) are mapped to
// ids through a VertexOrder, either explicit (`@order` header) or the
// lexicographic order of the vertex tokens.
//
// The standard basis of C_n lists the n-simplices in lexicographic tuple
// order; set<Simplex> iteration gives exactly that order within a fixed
// cardinality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pershom/linalg.hpp"
#include "pershom/matrix.hpp"
#include "pershom/snd.hpp"
#include "pershom/textio.hpp"

namespace pershom {

using VertexId = std::uint32_t;
using Simplex = std::vector<VertexId>;  // strictly ascending vertex ids
using SimplexSet = std::set<Simplex>;

inline bool simplex_well_formed(const Simplex& s) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) return false;
    return true;
}

inline std::size_t simplex_dim(const Simplex& s) {
    internal_check(!s.empty(), "empty simplex has no dimension");
    return s.size() - 1;
}

// The dim-1 faces in vertex-omission order: facets(s)[i] omits vertex s[i].
inline std::vector<Simplex> facets(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.size() < 2) return out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

struct SimplicialComplex {
    SimplexSet simplices;

    bool empty() const { return simplices.empty(); }

    // Dimension of the complex; -1 when empty.
    int dim() const {
        std::size_t largest = 0;
        for (const auto& s : simplices) largest = std::max(largest, s.size());
        return static_cast<int>(largest) - 1;
    }

    bool contains(const Simplex& s) const { return simplices.count(s) > 0; }

    // n-simplices in lexicographic order: the standard basis of C_n.
    std::vector<Simplex> simplices_of_dim(std::size_t n) const {
        std::vector<Simplex> out;
        for (const auto& s : simplices)
            if (s.size() == n + 1) out.push_back(s);
        return out;
    }

    std::size_t count_of_dim(std::size_t n) const {
        std::size_t c = 0;
        for (const auto& s : simplices)
            if (s.size() == n + 1) ++c;
        return c;
    }

    bool operator==(const SimplicialComplex&) const = default;
};

// First face-closure defect, as (simplex, missing facet); empty when closed.
inline std::optional<std::pair<Simplex, Simplex>> closure_defect(const SimplexSet& simplices) {
    for (const auto& s : simplices)
        for (const auto& f : facets(s))
            if (!simplices.count(f)) return std::make_pair(s, f);
    return std::nullopt;
}

inline void close_under_faces(SimplexSet& simplices) {
    std::vector<Simplex> frontier(simplices.begin(), simplices.end());
    while (!frontier.empty()) {
        Simplex s = std::move(frontier.back());
        frontier.pop_back();
        for (auto& f : facets(s))
            if (simplices.insert(f).second) frontier.push_back(std::move(f));
    }
}

inline std::string simplex_ids_to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out + "}";
}

// Builds a complex from a set of simplices; either inserts all missing
// faces (auto_close) or rejects a non-closed set naming the first offender.
inline SimplicialComplex make_complex(SimplexSet simplices, bool auto_close) {
    for (const auto& s : simplices)
        validate(simplex_well_formed(s),
                 "simplex " + simplex_ids_to_string(s) + " is not strictly ascending");
    if (auto_close) {
        close_under_faces(simplices);
    } else if (auto defect = closure_defect(simplices)) {
        throw ValidationError("complex is not closed under faces: simplex " +
                              simplex_ids_to_string(defect->first) + " is present but its face " +
                              simplex_ids_to_string(defect->second) + " is not");
    }
    return SimplicialComplex{std::move(simplices)};
}

// Boundary matrix of d_n in the standard bases: rows = (n-1)-simplices,
// columns = n-simplices, entry (-1)^i at the facet omitting vertex i.
// n = 0 gives the 0 x (#vertices) matrix.
template <EuclideanRing R>
Matrix<R> boundary_matrix(const R& ring, const SimplicialComplex& K, std::size_t n) {
    const auto cols = K.simplices_of_dim(n);
    const auto rows = n == 0 ? std::vector<Simplex>{} : K.simplices_of_dim(n - 1);
    std::map<Simplex, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

    Matrix<R> M(ring, rows.size(), cols.size());
    if (n == 0) return M;
    typename R::Elem sign = ring.one();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        sign = ring.one();
        for (const auto& f : facets(cols[j])) {
            auto it = row_index.find(f);
            internal_check(it != row_index.end(), "boundary facet missing from complex");
            M.at(it->second, j) = sign;
            sign = ring.negate(sign);
        }
    }
    return M;
}

// H_n = ker d_n / im d_{n+1} over a PID: free rank plus the invariant
// factors (non-unit diagonal entries of the SNF of d_{n+1}).
template <EuclideanRing R>
struct HomologySummary {
    std::size_t free_rank = 0;
    std::vector<typename R::Elem> invariant_factors;
};

template <EuclideanRing R>
HomologySummary<R> homology(const R& ring, const SimplicialComplex& K, std::size_t n) {
    const auto s1 = snd(boundary_matrix(ring, K, n));
    const auto s2 = snd(boundary_matrix(ring, K, n + 1));
    const std::size_t cycles = K.count_of_dim(n) - s1.rank;
    internal_check(s2.rank <= cycles, "boundary rank exceeds cycle rank");
    HomologySummary<R> out;
    out.free_rank = cycles - s2.rank;
    for (const auto& d : s2.diagonal)
        if (!ring.is_unit(d)) out.invariant_factors.push_back(d);
    return out;
}

// Betti number over a field by plain Gaussian elimination; deliberately
// avoids the Smith-decomposition engine so the two routes stay independent.
template <FieldRing F>
std::size_t betti_oracle(const F& field, const SimplicialComplex& K, std::size_t n) {
    const std::size_t r1 = field_rank(boundary_matrix(field, K, n));
    const std::size_t r2 = field_rank(boundary_matrix(field, K, n + 1));
    return K.count_of_dim(n) - r1 - r2;
}

inline long euler_characteristic(const SimplicialComplex& K) {
    long chi = 0;
    for (const auto& s : K.simplices) chi += s.size() % 2 == 1 ? 1 : -1;
    return chi;
}

// Named-vertex layer: a total order on vertex tokens.  The position of a
// token is its VertexId.
struct VertexOrder {
    std::vector<std::string> names;
    std::map<std::string, VertexId> index;

    static VertexOrder from_names(const std::vector<std::string>& names, std::size_t line_no) {
        VertexOrder order;
        for (const auto& name : names) {
            auto [it, fresh] = order.index.emplace(name, static_cast<VertexId>(order.names.size()));
            validate(fresh, at_line(line_no) + "duplicate vertex '" + name + "' in @order");
            order.names.push_back(name);
        }
        return order;
    }

    std::optional<VertexId> id_of(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

inline std::string simplex_name(const VertexOrder& order, const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        internal_check(s[i] < order.names.size(), "vertex id outside the vertex order");
        out += (i ? " " : "") + order.names[s[i]];
    }
    return out;
}

// Vertex tokens -> ascending id tuple under the order.  Tokens may arrive
// in any order but must be distinct.
inline Simplex simplex_from_tokens(const VertexOrder& order, const std::vector<std::string>& tokens,
                                   std::size_t line_no) {
    Simplex s;
    for (const auto& tok : tokens) {
        auto id = order.id_of(tok);
        validate(id.has_value(), at_line(line_no) + "unknown vertex '" + tok +
                                     "' (not covered by the vertex order)");
        s.push_back(*id);
    }
    std::sort(s.begin(), s.end());
    validate(std::adjacent_find(s.begin(), s.end()) == s.end(),
             at_line(line_no) + "repeated vertex in simplex");
    return s;
}

struct NamedComplex {
    VertexOrder order;
    SimplicialComplex complex;
};

// Complex text format: optional `@order v1 v2 ...` first line, then one
// simplex per line as vertex tokens; `#` starts a comment.  Without @order
// the orientation is the lexicographic order of all tokens that appear.
inline NamedComplex parse_complex_text(std::string_view text, bool auto_close) {
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
            for (const auto& tok : line.tokens) seen.insert(tok);
        }
        order = VertexOrder::from_names({seen.begin(), seen.end()}, 0);
    }
    SimplexSet simplices;
    for (std::size_t k = first_body; k < lines.size(); ++k) {
        validate(lines[k].tokens[0] != "@order",
                 at_line(lines[k].number) + "@order is only allowed as the first non-comment line");
        simplices.insert(simplex_from_tokens(order, lines[k].tokens, lines[k].number));
    }
    return NamedComplex{std::move(order), make_complex(std::move(simplices), auto_close)};
}

}  // namespace pershom
