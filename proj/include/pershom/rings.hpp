#pragma once

// Exact-arithmetic Euclidean domains behind one capability surface:
//
//   IntegerRing    Z    arbitrary-precision integers (GMP), norm |a|
//   RationalField  Q    canonical rationals (GMP), gcd(num, den) = 1, den > 0
//   PrimeField     Z_p  p prime, p <= 2^16, residues in [0, p)
//
// The graded polynomial ring F[x] lives in poly.hpp and implements the same
// surface.  div_rem is deterministic everywhere: over Z the remainder is
// canonicalized to [0, |b|), over a field it is always 0, over F[x] the
// remainder has degree < deg b.  unit_normalize(a) returns (u, c) with
// a = u*c and c the canonical associate (non-negative for Z, 1 for nonzero
// field elements, monic for F[x]).

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "pershom/diagnostics.hpp"

namespace pershom {

// Contract implemented by all rings in this library.  Operations never
// mutate their arguments; elements are plain values.
template <class R>
concept EuclideanRing =
    std::totally_ordered<typename R::Norm> &&
    requires(const R r, const typename R::Elem a, const typename R::Elem b,
             std::string_view sv) {
        { r.zero() } -> std::same_as<typename R::Elem>;
        { r.one() } -> std::same_as<typename R::Elem>;
        { r.add(a, b) } -> std::same_as<typename R::Elem>;
        { r.sub(a, b) } -> std::same_as<typename R::Elem>;
        { r.negate(a) } -> std::same_as<typename R::Elem>;
        { r.mul(a, b) } -> std::same_as<typename R::Elem>;
        { r.eq(a, b) } -> std::convertible_to<bool>;
        { r.is_zero(a) } -> std::convertible_to<bool>;
        { r.div_rem(a, b) } -> std::same_as<std::pair<typename R::Elem, typename R::Elem>>;
        { r.norm(a) } -> std::same_as<typename R::Norm>;
        { r.is_unit(a) } -> std::convertible_to<bool>;
        { r.unit_normalize(a) } -> std::same_as<std::pair<typename R::Elem, typename R::Elem>>;
        { r.parse(sv) } -> std::same_as<std::optional<typename R::Elem>>;
        { r.to_string(a) } -> std::same_as<std::string>;
        { r.name() } -> std::convertible_to<std::string>;
        { r.code() } -> std::convertible_to<std::string>;
    };

// A Euclidean ring in which every nonzero element is a unit.
template <class F>
concept FieldRing = EuclideanRing<F> && requires(const F f, const typename F::Elem a) {
    { f.inv(a) } -> std::same_as<typename F::Elem>;
};

// True iff a divides b (a nonzero).
template <EuclideanRing R>
bool divides(const R& ring, const typename R::Elem& a, const typename R::Elem& b) {
    return ring.is_zero(ring.div_rem(b, a).second);
}

// Quotient b / a when the division is exact; InternalError otherwise.
template <EuclideanRing R>
typename R::Elem exact_div(const R& ring, const typename R::Elem& b, const typename R::Elem& a) {
    auto [q, r] = ring.div_rem(b, a);
    internal_check(ring.is_zero(r), "exact_div: division is not exact in " + ring.name());
    return q;
}

// Inverse of a unit u (u * unit_inv(u) = 1); InternalError if u is not a unit.
template <EuclideanRing R>
typename R::Elem unit_inv(const R& ring, const typename R::Elem& u) {
    internal_check(ring.is_unit(u), "unit_inv: argument is not a unit in " + ring.name());
    return exact_div(ring, ring.one(), u);
}

// True for optionally signed decimal literals: -?[0-9]+ (a leading + is
// also accepted).
inline bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    return s.find_first_not_of("0123456789") == std::string_view::npos;
}

// mpz_set_str rejects a leading '+', so strip it before constructing.
inline std::optional<mpz_class> parse_mpz(std::string_view s) {
    if (!is_integer_literal(s)) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

struct IntegerRing {
    using Elem = mpz_class;
    using Norm = mpz_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem negate(const Elem& a) const { return Elem(-a); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    // a = q*b + r with 0 <= r < |b|.
    std::pair<Elem, Elem> div_rem(const Elem& a, const Elem& b) const {
        internal_check(sgn(b) != 0, "division by zero in Z");
        Elem r;
        mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Elem num(a - r);
        Elem q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
        return {q, r};
    }

    Norm norm(const Elem& a) const { return Elem(abs(a)); }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }

    // Canonical associates are the non-negative integers.
    std::pair<Elem, Elem> unit_normalize(const Elem& a) const {
        if (sgn(a) < 0) return {Elem(-1), Elem(-a)};
        return {Elem(1), a};
    }

    std::optional<Elem> parse(std::string_view s) const { return parse_mpz(s); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }
    std::string code() const { return "z"; }
};

struct RationalField {
    using Elem = mpq_class;
    using Norm = int;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem negate(const Elem& a) const { return Elem(-a); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    std::pair<Elem, Elem> div_rem(const Elem& a, const Elem& b) const {
        internal_check(sgn(b) != 0, "division by zero in Q");
        return {Elem(a / b), Elem(0)};
    }

    Norm norm(const Elem& a) const { return is_zero(a) ? 0 : 1; }
    bool is_unit(const Elem& a) const { return !is_zero(a); }

    std::pair<Elem, Elem> unit_normalize(const Elem& a) const {
        if (is_zero(a)) return {Elem(1), Elem(0)};
        return {a, Elem(1)};
    }

    Elem inv(const Elem& a) const {
        internal_check(!is_zero(a), "inverse of zero in Q");
        return Elem(1 / a);
    }

    // Accepts `p` or `p/q` with integer literals p, q and q != 0; the result
    // is canonicalized (gcd 1, positive denominator).
    std::optional<Elem> parse(std::string_view s) const {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            auto v = parse_mpz(s);
            if (!v) return std::nullopt;
            return Elem(*v);
        }
        auto n = parse_mpz(s.substr(0, slash));
        auto d = parse_mpz(s.substr(slash + 1));
        if (!n || !d) return std::nullopt;
        if (sgn(*d) == 0) return std::nullopt;
        Elem out(*n, *d);
        out.canonicalize();
        return out;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }
    std::string code() const { return "q"; }
};

class PrimeField {
public:
    using Elem = std::uint32_t;
    using Norm = int;

    // Trial-division primality check; the modulus must lie in [2, 2^16].
    explicit PrimeField(std::uint32_t p) : p_(p) {
        validate(p >= 2 && p <= 65536,
                 "prime field modulus must be in [2, 65536], got " + std::to_string(p));
        validate(is_prime(p), "prime field modulus " + std::to_string(p) + " is not prime");
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem negate(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }

    std::pair<Elem, Elem> div_rem(Elem a, Elem b) const {
        internal_check(b != 0, "division by zero in " + name());
        return {mul(a, inv(b)), 0};
    }

    Norm norm(Elem a) const { return a == 0 ? 0 : 1; }
    bool is_unit(Elem a) const { return a != 0; }

    std::pair<Elem, Elem> unit_normalize(Elem a) const {
        if (a == 0) return {one(), 0};
        return {a, one()};
    }

    Elem inv(Elem a) const {
        internal_check(a != 0, "inverse of zero in " + name());
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }

    // Accepts any integer literal and reduces it modulo p.
    std::optional<Elem> parse(std::string_view s) const {
        auto v = parse_mpz(s);
        if (!v) return std::nullopt;
        return static_cast<Elem>(mpz_fdiv_ui(v->get_mpz_t(), p_));
    }
    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "Z" + std::to_string(p_); }
    std::string code() const { return "z" + std::to_string(p_); }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
};

static_assert(EuclideanRing<IntegerRing>);
static_assert(EuclideanRing<RationalField>);
static_assert(EuclideanRing<PrimeField>);
static_assert(FieldRing<RationalField>);
static_assert(FieldRing<PrimeField>);

}  // namespace pershom
