#pragma once

// Matrix text format.
//
//   m n ring          header: row count, column count, ring code
//   e11 ... e1n       m rows of n whitespace-separated ring elements
//   ...
//   rowdeg d1 ... dm  graded matrices only: codomain basis degrees
//   coldeg d1 ... dn  graded matrices only: domain basis degrees
//
// `#` comments and blank lines are allowed anywhere.  The two degree lines
// must both be present or both absent; when present the file describes a
// graded matrix and the ring must be a polynomial ring.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pershom/graded.hpp"
#include "pershom/matrix.hpp"
#include "pershom/textio.hpp"

namespace pershom {

struct RawMatrixFile {
    std::size_t rows = 0, cols = 0;
    std::string ring_code;
    std::vector<std::vector<std::string>> entries;          // rows x cols element tokens
    std::optional<std::vector<unsigned>> row_degrees, col_degrees;
};

namespace detail {
inline std::optional<std::size_t> parse_size(const std::string& tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

inline std::vector<unsigned> parse_degree_line(const TextLine& line, std::size_t expected,
                                               const char* label) {
    validate(line.tokens.size() == expected + 1,
             at_line(line.number) + std::string(label) + " expects " + std::to_string(expected) +
                 " degrees, got " + std::to_string(line.tokens.size() - 1));
    std::vector<unsigned> out;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        auto v = parse_size(line.tokens[t]);
        validate(v.has_value() && *v <= 1000000,
                 at_line(line.number) + "bad degree '" + line.tokens[t] + "'");
        out.push_back(static_cast<unsigned>(*v));
    }
    return out;
}
}  // namespace detail

// Structural parse: shapes, tokens, and degree lines; element syntax is
// checked later against a concrete ring by realize_matrix.
inline RawMatrixFile parse_matrix_file(std::string_view text) {
    auto lines = tokenize_lines(text);
    validate(!lines.empty(), "matrix file is empty");

    const auto& head = lines.front();
    validate(head.tokens.size() == 3,
             at_line(head.number) + "matrix header must be 'rows cols ring'");
    auto m = detail::parse_size(head.tokens[0]);
    auto n = detail::parse_size(head.tokens[1]);
    validate(m.has_value() && n.has_value(),
             at_line(head.number) + "bad matrix shape '" + head.tokens[0] + " " + head.tokens[1] +
                 "'");

    RawMatrixFile out;
    out.rows = *m;
    out.cols = *n;
    out.ring_code = head.tokens[2];

    std::size_t next = 1;
    for (std::size_t i = 0; i < out.rows; ++i) {
        validate(next < lines.size(), "matrix file ends after " + std::to_string(i) + " of " +
                                          std::to_string(out.rows) + " entry rows");
        const auto& line = lines[next++];
        validate(line.tokens.size() == out.cols,
                 at_line(line.number) + "expected " + std::to_string(out.cols) +
                     " entries, got " + std::to_string(line.tokens.size()));
        out.entries.push_back(line.tokens);
    }
    while (next < lines.size()) {
        const auto& line = lines[next++];
        if (line.tokens.front() == "rowdeg") {
            validate(!out.row_degrees, at_line(line.number) + "duplicate rowdeg line");
            out.row_degrees = detail::parse_degree_line(line, out.rows, "rowdeg");
        } else if (line.tokens.front() == "coldeg") {
            validate(!out.col_degrees, at_line(line.number) + "duplicate coldeg line");
            out.col_degrees = detail::parse_degree_line(line, out.cols, "coldeg");
        } else {
            throw ValidationError(at_line(line.number) + "unexpected content '" +
                                  line.tokens.front() + "' after matrix rows");
        }
    }
    validate(out.row_degrees.has_value() == out.col_degrees.has_value(),
             "graded matrix files need both rowdeg and coldeg lines");
    return out;
}

inline bool is_graded_file(const RawMatrixFile& raw) { return raw.row_degrees.has_value(); }

// Parses every entry token in the declared ring.
template <EuclideanRing R>
Matrix<R> realize_matrix(const R& ring, const RawMatrixFile& raw) {
    Matrix<R> M(ring, raw.rows, raw.cols);
    for (std::size_t i = 0; i < raw.rows; ++i)
        for (std::size_t j = 0; j < raw.cols; ++j) {
            auto e = ring.parse(raw.entries[i][j]);
            validate(e.has_value(), "entry (" + std::to_string(i + 1) + ", " +
                                        std::to_string(j + 1) + ") = '" + raw.entries[i][j] +
                                        "' is not a valid element of " + ring.name());
            M.at(i, j) = std::move(*e);
        }
    return M;
}

// Parses entries and degree lines into a validated graded matrix.
template <FieldRing F>
GradedMatrix<F> realize_graded_matrix(const PolynomialRing<F>& ring, const RawMatrixFile& raw) {
    validate(is_graded_file(raw), "matrix file has no rowdeg/coldeg lines");
    GradedMatrix<F> G{realize_matrix(ring, raw), *raw.row_degrees, *raw.col_degrees};
    validate_graded(G);
    return G;
}

template <EuclideanRing R>
std::string matrix_body_to_text(const Matrix<R>& M) {
    std::string out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out += ' ';
            out += M.ring().to_string(M.at(i, j));
        }
        out += '\n';
    }
    return out;
}

template <EuclideanRing R>
std::string matrix_to_text(const Matrix<R>& M) {
    std::string out = std::to_string(M.rows()) + " " + std::to_string(M.cols()) + " " +
                      M.ring().code() + "\n";
    return out + matrix_body_to_text(M);
}

template <FieldRing F>
std::string graded_matrix_to_text(const GradedMatrix<F>& G) {
    std::string out = matrix_to_text(G.base);
    out += "rowdeg";
    for (unsigned d : G.row_degrees) out += " " + std::to_string(d);
    out += "\ncoldeg";
    for (unsigned d : G.col_degrees) out += " " + std::to_string(d);
    out += "\n";
    return out;
}

}  // namespace pershom
