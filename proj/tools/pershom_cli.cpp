// Command-line front end: Smith Normal Decompositions of matrix files,
// homology of complex files, barcodes and Betti queries of filtration files.
//
// Exit codes: 0 success, 1 input/validation error, 2 internal invariant
// failure (a bug, never the input's fault).  Results go to stdout,
// diagnostics and warnings to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pershom/barcode_io.hpp"
#include "pershom/matrix_io.hpp"
#include "pershom/persmod.hpp"
#include "pershom/ring_codes.hpp"

namespace {

using namespace pershom;

std::string read_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SndOptions {
    std::string input;
    std::string ring;  // empty: take the file header's ring
    std::string format = "text";
    bool verify = false;  // accepted for uniformity; snd always verifies
};

template <EuclideanRing R>
nlohmann::json matrix_to_json_rows(const Matrix<R>& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M.ring().to_string(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <EuclideanRing R>
void print_snd_text(std::ostream& out, const R& ring, const SndResult<R>& res,
                    const std::vector<unsigned>* new_row_deg,
                    const std::vector<unsigned>* new_col_deg) {
    out << "ring: " << ring.name() << "\n";
    out << "rank: " << res.rank << "\n";
    out << "diagonal:";
    for (const auto& d : res.diagonal) out << " " << ring.to_string(d);
    out << "\n";
    if (new_row_deg) {
        out << "rowdeg:";
        for (unsigned d : *new_row_deg) out << " " << d;
        out << "\ncoldeg:";
        for (unsigned d : *new_col_deg) out << " " << d;
        out << "\n";
    }
    out << "U:\n" << matrix_body_to_text(res.U);
    out << "D:\n" << matrix_body_to_text(res.D);
    out << "V:\n" << matrix_body_to_text(res.V);
    out << "verified: true\n";
}

template <EuclideanRing R>
nlohmann::json snd_to_json(const R& ring, const SndResult<R>& res,
                           const std::vector<unsigned>* new_row_deg,
                           const std::vector<unsigned>* new_col_deg) {
    nlohmann::json out;
    out["ring"] = ring.code();
    out["rank"] = res.rank;
    nlohmann::json diag = nlohmann::json::array();
    for (const auto& d : res.diagonal) diag.push_back(ring.to_string(d));
    out["diagonal"] = std::move(diag);
    if (new_row_deg) {
        out["rowdeg"] = *new_row_deg;
        out["coldeg"] = *new_col_deg;
    }
    out["U"] = matrix_to_json_rows(res.U);
    out["D"] = matrix_to_json_rows(res.D);
    out["V"] = matrix_to_json_rows(res.V);
    out["verified"] = true;
    return out;
}

void run_snd(const SndOptions& opts) {
    const auto raw = parse_matrix_file(read_input_file(opts.input));
    if (!opts.ring.empty() && opts.ring != raw.ring_code)
        throw ValidationError("ring mismatch: file declares '" + raw.ring_code +
                              "' but --ring says '" + opts.ring + "'");
    auto ringv = parse_ring_code(raw.ring_code);
    validate(ringv.has_value(), "unknown ring code '" + raw.ring_code + "' in matrix header");

    std::visit(
        [&](const auto& ring) {
            using R = std::decay_t<decltype(ring)>;
            constexpr bool is_poly = std::is_same_v<R, PolynomialRing<RationalField>> ||
                                     std::is_same_v<R, PolynomialRing<PrimeField>>;
            if (is_graded_file(raw)) {
                if constexpr (is_poly) {
                    auto G = realize_graded_matrix(ring, raw);
                    auto res = graded_snd(G);
                    if (!verify_snd(G.base, res.snd))
                        throw InternalError("decomposition failed verification");
                    if (opts.format == "json")
                        std::cout << snd_to_json(ring, res.snd, &res.new_row_degrees,
                                                 &res.new_col_degrees)
                                         .dump(2)
                                  << "\n";
                    else
                        print_snd_text(std::cout, ring, res.snd, &res.new_row_degrees,
                                       &res.new_col_degrees);
                } else {
                    throw ValidationError(
                        "rowdeg/coldeg labels require a polynomial ring (qx or z<p>x), not '" +
                        raw.ring_code + "'");
                }
            } else {
                auto M = realize_matrix(ring, raw);
                auto res = snd(M);
                if (!verify_snd(M, res)) throw InternalError("decomposition failed verification");
                if (opts.format == "json")
                    std::cout << snd_to_json(ring, res, nullptr, nullptr).dump(2) << "\n";
                else
                    print_snd_text(std::cout, ring, res, nullptr, nullptr);
            }
        },
        *ringv);
}

struct HomologyOptions {
    std::string input;
    std::string ring = "z";
    std::string format = "text";
    std::optional<std::size_t> dim;
    bool verify = false;
};

void run_homology(const HomologyOptions& opts) {
    const auto named = parse_complex_text(read_input_file(opts.input), /*auto_close=*/false);
    auto ringv = parse_ring_code(opts.ring);
    validate(ringv.has_value(), "unknown ring code '" + opts.ring + "'");

    const int dim_k = named.complex.dim();
    std::vector<std::size_t> dims;
    if (opts.dim)
        dims.push_back(*opts.dim);
    else
        for (int n = 0; n <= dim_k; ++n) dims.push_back(static_cast<std::size_t>(n));

    std::visit(
        [&](const auto& ring) {
            nlohmann::json groups = nlohmann::json::array();
            std::ostringstream text;
            text << "ring: " << ring.name() << "\n";
            for (std::size_t n : dims) {
                auto h = homology(ring, named.complex, n);
                if (opts.verify) {
                    auto s1 = snd(boundary_matrix(ring, named.complex, n));
                    auto s2 = snd(boundary_matrix(ring, named.complex, n + 1));
                    if (!verify_snd(boundary_matrix(ring, named.complex, n), s1) ||
                        !verify_snd(boundary_matrix(ring, named.complex, n + 1), s2))
                        throw InternalError("boundary decomposition failed verification");
                    // Rank cross-check by plain Gaussian elimination where a
                    // field is available (free rank is field-independent in
                    // characteristic zero).
                    using R = std::decay_t<decltype(ring)>;
                    if constexpr (std::is_same_v<R, IntegerRing> ||
                                  std::is_same_v<R, RationalField>) {
                        RationalField q;
                        if (betti_oracle(q, named.complex, n) != h.free_rank)
                            throw InternalError("free rank disagrees with the Gaussian oracle");
                    } else if constexpr (std::is_same_v<R, PrimeField>) {
                        if (betti_oracle(ring, named.complex, n) != h.free_rank)
                            throw InternalError("free rank disagrees with the Gaussian oracle");
                    }
                }
                text << "H_" << n << ": free " << h.free_rank << ", torsion [";
                nlohmann::json torsion = nlohmann::json::array();
                for (std::size_t k = 0; k < h.invariant_factors.size(); ++k) {
                    text << (k ? ", " : "") << ring.to_string(h.invariant_factors[k]);
                    torsion.push_back(ring.to_string(h.invariant_factors[k]));
                }
                text << "]\n";
                groups.push_back({{"dim", n},
                                  {"free", h.free_rank},
                                  {"torsion", std::move(torsion)}});
            }
            if (opts.format == "json") {
                nlohmann::json out;
                out["ring"] = ring.code();
                out["homology"] = std::move(groups);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << text.str();
            }
        },
        *ringv);
}

struct BarcodeOptions {
    std::string input;
    std::string field = "q";
    std::string format = "text";
    std::optional<std::size_t> max_dim;
    bool verify = false;
    bool strict = false;
};

NamedFiltration load_filtration(const std::string& path, bool strict) {
    FiltrationWarnings warnings;
    auto named = parse_filtration_text(read_input_file(path),
                                       strict ? DuplicatePolicy::Strict : DuplicatePolicy::Lenient,
                                       &warnings);
    for (const auto& w : warnings.messages) std::cerr << "warning: " << w << "\n";
    return named;
}

template <FieldRing F>
void verify_dimension_against_oracle(const Filtration& filt, std::size_t n, const F& field) {
    const auto bars = persistent_homology(filt, n, field);
    verify_representatives(filt, n, field, bars);
    std::vector<Interval> intervals;
    for (const auto& b : bars) intervals.push_back(b.interval);
    const auto module = from_filtration(filt, n, field);
    internal_check(check_interval_decomposition(module, intervals),
                   "barcode intervals fail the persistence-module rank check in dimension " +
                       std::to_string(n));
    for (unsigned t = 0; t <= filt.horizon; ++t)
        for (unsigned s = t; s <= filt.horizon; ++s) {
            std::size_t count = 0;
            for (const auto& j : intervals)
                if (j.contains_range(t, s)) ++count;
            internal_check(rank_inclusion(filt, n, field, t, s) == count,
                           "inclusion rank disagrees with the barcode counting formula");
        }
}

template <FieldRing F>
void verify_barcode_against_oracle(const Filtration& filt, const F& field) {
    const int dim_k = filt.complex.dim();
    for (int n = 0; n <= dim_k; ++n)
        verify_dimension_against_oracle(filt, static_cast<std::size_t>(n), field);
}

void run_barcode(const BarcodeOptions& opts) {
    auto named = load_filtration(opts.input, opts.strict);
    auto fieldv = parse_field_code(opts.field);
    validate(fieldv.has_value(), "unknown field code '" + opts.field + "' (use q or z<p>)");

    std::visit(
        [&](const auto& field) {
            auto bc = barcode(named.filt, field, opts.max_dim);
            if (opts.verify) verify_barcode_against_oracle(named.filt, field);
            if (opts.format == "json")
                std::cout << barcode_to_json(bc, named.order).dump(2) << "\n";
            else
                std::cout << barcode_to_text(bc);
        },
        *fieldv);
}

struct BettiOptions {
    std::string input;
    std::string field = "q";
    std::string format = "text";
    std::size_t dim = 0;
    unsigned t = 0;
    std::optional<unsigned> p;
    bool verify = false;
    bool strict = false;
};

void run_betti(const BettiOptions& opts) {
    auto named = load_filtration(opts.input, opts.strict);
    auto fieldv = parse_field_code(opts.field);
    validate(fieldv.has_value(), "unknown field code '" + opts.field + "' (use q or z<p>)");

    std::visit(
        [&](const auto& field) {
            const auto bars = persistent_homology(named.filt, opts.dim, field);
            if (opts.verify) verify_dimension_against_oracle(named.filt, opts.dim, field);
            const std::size_t value =
                opts.p ? p_persistent_betti(bars, opts.t, *opts.p) : betti_at(bars, opts.t);
            if (opts.format == "json") {
                nlohmann::json out;
                out["field"] = field.name();
                out["dim"] = opts.dim;
                out["t"] = opts.t;
                out["p"] = opts.p ? nlohmann::json(*opts.p) : nlohmann::json(nullptr);
                out["value"] = value;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << value << "\n";
            }
        },
        *fieldv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simplicial homology and persistent-homology barcodes"};
    app.require_subcommand(1);

    SndOptions snd_opts;
    auto* snd_cmd = app.add_subcommand("snd", "Smith Normal Decomposition of a matrix file");
    snd_cmd->add_option("--input", snd_opts.input, "matrix file")->required();
    snd_cmd->add_option("--ring", snd_opts.ring, "expected ring code (must match the file header)");
    snd_cmd->add_option("--format", snd_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    snd_cmd->add_flag("--verify", snd_opts.verify,
                      "re-check the decomposition identity (always on for snd)");

    HomologyOptions hom_opts;
    auto* hom_cmd = app.add_subcommand("homology", "homology groups of a complex file");
    hom_cmd->add_option("--input", hom_opts.input, "complex file")->required();
    hom_cmd->add_option("--ring", hom_opts.ring, "coefficient ring code (default z)");
    hom_cmd->add_option("--dim", hom_opts.dim, "single dimension (default: all)");
    hom_cmd->add_option("--format", hom_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    hom_cmd->add_flag("--verify", hom_opts.verify, "cross-check decompositions and ranks");

    BarcodeOptions bar_opts;
    auto* bar_cmd = app.add_subcommand("barcode", "persistence barcode of a filtration file");
    bar_cmd->add_option("--input", bar_opts.input, "filtration file")->required();
    bar_cmd->add_option("--field", bar_opts.field, "coefficient field: q or z<p> (default q)");
    bar_cmd->add_option("--max-dim", bar_opts.max_dim, "largest dimension to report");
    bar_cmd->add_option("--format", bar_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bar_cmd->add_flag("--verify", bar_opts.verify,
                      "cross-check against the persistence-module oracle");
    bar_cmd->add_flag("--strict", bar_opts.strict, "reject duplicate filtration events");

    BettiOptions betti_opts;
    auto* betti_cmd = app.add_subcommand("betti", "Betti number query on a filtration file");
    betti_cmd->add_option("--input", betti_opts.input, "filtration file")->required();
    betti_cmd->add_option("--field", betti_opts.field, "coefficient field: q or z<p> (default q)");
    betti_cmd->add_option("--dim", betti_opts.dim, "homology dimension")->required();
    betti_cmd->add_option("--t", betti_opts.t, "filtration index")->required();
    betti_cmd->add_option("--p", betti_opts.p, "persistence offset (omit for a plain Betti number)");
    betti_cmd->add_option("--format", betti_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    betti_cmd->add_flag("--verify", betti_opts.verify,
                        "cross-check against the persistence-module oracle");
    betti_cmd->add_flag("--strict", betti_opts.strict, "reject duplicate filtration events");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (snd_cmd->parsed()) run_snd(snd_opts);
        if (hom_cmd->parsed()) run_homology(hom_opts);
        if (bar_cmd->parsed()) run_barcode(bar_opts);
        if (betti_cmd->parsed()) run_betti(betti_opts);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
