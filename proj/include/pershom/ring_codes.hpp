#pragma once

// Short ring codes used by the CLI and by matrix file headers:
//
//   z      integers Z
//   q      rationals Q
//   z<p>   prime field Z_p (p prime, decimal)
//   qx     polynomials Q[x]
//   z<p>x  polynomials Z_p[x]
//
// Codes are case-sensitive (lower case).  A syntactically valid z<p> code
// with a non-prime p raises ValidationError from the PrimeField constructor.

#include <charconv>
#include <optional>
#include <string_view>
#include <variant>

#include "pershom/poly.hpp"

namespace pershom {

using RingVariant = std::variant<IntegerRing, RationalField, PrimeField,
                                 PolynomialRing<RationalField>, PolynomialRing<PrimeField>>;
using FieldVariant = std::variant<RationalField, PrimeField>;

namespace detail {
inline std::optional<std::uint32_t> parse_small_nat(std::string_view s) {
    std::uint32_t v = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}
}  // namespace detail

// Field codes: q, z<p>.
inline std::optional<FieldVariant> parse_field_code(std::string_view code) {
    if (code == "q") return FieldVariant(RationalField{});
    if (code.size() >= 2 && code.front() == 'z') {
        auto p = detail::parse_small_nat(code.substr(1));
        if (!p) return std::nullopt;
        return FieldVariant(PrimeField(*p));
    }
    return std::nullopt;
}

// Ring codes: z, q, z<p>, qx, z<p>x.
inline std::optional<RingVariant> parse_ring_code(std::string_view code) {
    if (code == "z") return RingVariant(IntegerRing{});
    if (code == "q") return RingVariant(RationalField{});
    if (code == "qx") return RingVariant(PolynomialRing<RationalField>(RationalField{}));
    if (code.size() >= 2 && code.front() == 'z') {
        std::string_view rest = code.substr(1);
        const bool poly = rest.back() == 'x';
        if (poly) rest.remove_suffix(1);
        auto p = detail::parse_small_nat(rest);
        if (!p) return std::nullopt;
        if (poly) return RingVariant(PolynomialRing<PrimeField>(PrimeField(*p)));
        return RingVariant(PrimeField(*p));
    }
    return std::nullopt;
}

}  // namespace pershom
