#pragma once

// Univariate polynomials over a field, with the standard grading.
//
// A Polynomial stores a finite map degree -> nonzero coefficient; the zero
// polynomial is the empty map.  The homogeneous elements of F[x] are exactly
// the monomials c*x^d; degh returns d for those and an empty optional for
// zero and for polynomials with two or more terms (the degree of 0 is left
// undefined and nothing in the library relies on it).

#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "pershom/rings.hpp"

namespace pershom {

template <class C>
struct Polynomial {
    std::map<unsigned, C> coeffs;  // no zero coefficients stored
    bool operator==(const Polynomial&) const = default;
};

template <FieldRing F>
class PolynomialRing {
public:
    using Coeff = typename F::Elem;
    using Elem = Polynomial<Coeff>;
    using Norm = unsigned;  // degree of a nonzero polynomial

    explicit PolynomialRing(F base) : base_(std::move(base)) {}

    const F& coefficient_field() const { return base_; }

    Elem zero() const { return {}; }
    Elem one() const { return monomial(base_.one(), 0); }

    Elem monomial(const Coeff& c, unsigned d) const {
        Elem f;
        if (!base_.is_zero(c)) f.coeffs.emplace(d, c);
        return f;
    }
    Elem constant(const Coeff& c) const { return monomial(c, 0); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out = a;
        for (const auto& [d, c] : b.coeffs) add_term(out, d, c);
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, negate(b)); }
    Elem negate(const Elem& a) const {
        Elem out;
        for (const auto& [d, c] : a.coeffs) out.coeffs.emplace(d, base_.negate(c));
        return out;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem out;
        for (const auto& [da, ca] : a.coeffs)
            for (const auto& [db, cb] : b.coeffs) add_term(out, da + db, base_.mul(ca, cb));
        return out;
    }

    bool eq(const Elem& a, const Elem& b) const { return eq_impl(a, b); }

    bool is_zero(const Elem& a) const { return a.coeffs.empty(); }

    // deg of a nonzero polynomial (the largest stored degree).
    unsigned deg(const Elem& a) const {
        internal_check(!is_zero(a), "deg of the zero polynomial is undefined");
        return a.coeffs.rbegin()->first;
    }
    const Coeff& leading_coeff(const Elem& a) const {
        internal_check(!is_zero(a), "leading coefficient of zero");
        return a.coeffs.rbegin()->second;
    }

    // Homogeneous degree: d if a = c*x^d with c != 0, empty otherwise.
    std::optional<unsigned> degh(const Elem& a) const {
        if (a.coeffs.size() != 1) return std::nullopt;
        return a.coeffs.begin()->first;
    }

    // Polynomial long division: a = q*b + r with r = 0 or deg r < deg b.
    std::pair<Elem, Elem> div_rem(const Elem& a, const Elem& b) const {
        internal_check(!is_zero(b), "division by zero in " + name());
        Elem q, r = a;
        const unsigned db = deg(b);
        const Coeff lb_inv = base_.inv(leading_coeff(b));
        while (!is_zero(r) && deg(r) >= db) {
            const unsigned shift = deg(r) - db;
            const Coeff c = base_.mul(leading_coeff(r), lb_inv);
            const Elem t = monomial(c, shift);
            q = add(q, t);
            r = sub(r, mul(t, b));
        }
        return {q, r};
    }

    Norm norm(const Elem& a) const { return is_zero(a) ? 0u : deg(a); }
    bool is_unit(const Elem& a) const {
        return a.coeffs.size() == 1 && a.coeffs.begin()->first == 0;
    }

    // Canonical associates are 0 and the monic polynomials.
    std::pair<Elem, Elem> unit_normalize(const Elem& a) const {
        if (is_zero(a)) return {one(), zero()};
        const Coeff lc = leading_coeff(a);
        return {constant(lc), mul(constant(base_.inv(lc)), a)};
    }

    // Accepts sums of terms `c`, `cx`, `cx^d`, `x`, `x^d` with coefficients
    // in the base field's syntax, e.g. "3x^2+1", "-x", "1/2x^3-1/2".
    std::optional<Elem> parse(std::string_view s) const {
        if (s.empty()) return std::nullopt;
        Elem out;
        std::size_t i = 0;
        bool first = true;
        while (i < s.size()) {
            bool neg = false;
            if (s[i] == '+' || s[i] == '-') {
                neg = s[i] == '-';
                ++i;
            } else if (!first) {
                return std::nullopt;
            }
            first = false;
            std::size_t j = i;
            while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
            std::string_view term = s.substr(i, j - i);
            i = j;
            if (term.empty()) return std::nullopt;
            auto xpos = term.find('x');
            std::string_view coefpart =
                term.substr(0, xpos == std::string_view::npos ? term.size() : xpos);
            unsigned d = 0;
            if (xpos != std::string_view::npos) {
                std::string_view expo = term.substr(xpos + 1);
                if (expo.empty()) {
                    d = 1;
                } else {
                    if (expo.front() != '^') return std::nullopt;
                    expo.remove_prefix(1);
                    auto [ptr, ec] =
                        std::from_chars(expo.data(), expo.data() + expo.size(), d);
                    if (ec != std::errc{} || ptr != expo.data() + expo.size()) return std::nullopt;
                    if (d > 1000000) return std::nullopt;
                }
            }
            Coeff c;
            if (coefpart.empty()) {
                if (xpos == std::string_view::npos) return std::nullopt;
                c = base_.one();
            } else {
                auto pc = base_.parse(coefpart);
                if (!pc) return std::nullopt;
                c = *pc;
            }
            if (neg) c = base_.negate(c);
            add_term(out, d, c);
        }
        return out;
    }

    // Terms in descending degree; unit coefficients on x-terms are folded
    // into the sign, e.g. "x^3-2x+1", "-1/2x^2".
    std::string to_string(const Elem& f) const {
        if (is_zero(f)) return "0";
        std::string out;
        for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
            const auto& [d, c] = *it;
            std::string cs = base_.to_string(c);
            const bool neg = !cs.empty() && cs.front() == '-';
            std::string body = neg ? cs.substr(1) : cs;
            std::string piece;
            if (d == 0) {
                piece = body;
            } else {
                if (body != "1") piece = body;
                piece += "x";
                if (d > 1) piece += "^" + std::to_string(d);
            }
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            out += piece;
        }
        return out;
    }

    std::string name() const { return base_.name() + "[x]"; }
    std::string code() const { return base_.code() + "x"; }

private:
    F base_;

    void add_term(Elem& f, unsigned d, const Coeff& c) const {
        if (base_.is_zero(c)) return;
        auto it = f.coeffs.find(d);
        if (it == f.coeffs.end()) {
            f.coeffs.emplace(d, c);
            return;
        }
        it->second = base_.add(it->second, c);
        if (base_.is_zero(it->second)) f.coeffs.erase(it);
    }

    bool eq_impl(const Elem& a, const Elem& b) const {
        if (a.coeffs.size() != b.coeffs.size()) return false;
        auto ia = a.coeffs.begin();
        auto ib = b.coeffs.begin();
        for (; ia != a.coeffs.end(); ++ia, ++ib) {
            if (ia->first != ib->first || !base_.eq(ia->second, ib->second)) return false;
        }
        return true;
    }
};

static_assert(EuclideanRing<PolynomialRing<RationalField>>);
static_assert(EuclideanRing<PolynomialRing<PrimeField>>);

}  // namespace pershom
