#include <catch2/catch_amalgamated.hpp>

#include "pershom/poly.hpp"
#include "pershom/ring_codes.hpp"
#include "pershom/rings.hpp"
#include "testutil.hpp"

using namespace pershom;

namespace {

template <EuclideanRing R>
void check_div_rem_contract(const R& ring, const typename R::Elem& a, const typename R::Elem& b) {
    auto [q, r] = ring.div_rem(a, b);
    REQUIRE(ring.eq(a, ring.add(ring.mul(q, b), r)));
    if (!ring.is_zero(r)) REQUIRE(ring.norm(r) < ring.norm(b));
}

}  // namespace

TEST_CASE("integer division is canonical", "[rings]") {
    IntegerRing z;

    SECTION("remainders lie in [0, |b|)") {
        auto [q1, r1] = z.div_rem(7, 3);
        CHECK(q1 == 2);
        CHECK(r1 == 1);
        auto [q2, r2] = z.div_rem(-7, 3);
        CHECK(q2 == -3);
        CHECK(r2 == 2);
        auto [q3, r3] = z.div_rem(7, -3);
        CHECK(q3 == -2);
        CHECK(r3 == 1);
        auto [q4, r4] = z.div_rem(0, 5);
        CHECK(q4 == 0);
        CHECK(r4 == 0);
    }

    SECTION("random identities, small and huge operands") {
        ptest::Rng rng(101);
        for (int it = 0; it < 5000; ++it) {
            mpz_class a = ptest::rand_mpz(rng, -50, 50);
            mpz_class b = ptest::rand_mpz(rng, -50, 50);
            if (sgn(b) == 0) continue;
            auto [q, r] = z.div_rem(a, b);
            CHECK(a == q * b + r);
            CHECK(sgn(r) >= 0);
            CHECK(r < abs(b));
        }
        for (int it = 0; it < 2000; ++it) {
            mpz_class a = ptest::rand_big_mpz(rng);
            mpz_class b = ptest::rand_big_mpz(rng);
            auto [q, r] = z.div_rem(a, b);
            CHECK(a == q * b + r);
            CHECK(sgn(r) >= 0);
            CHECK(r < abs(b));
        }
    }

    SECTION("units and canonical associates") {
        CHECK(z.is_unit(mpz_class(1)));
        CHECK(z.is_unit(mpz_class(-1)));
        CHECK_FALSE(z.is_unit(mpz_class(2)));
        CHECK_FALSE(z.is_unit(mpz_class(0)));
        auto [u, c] = z.unit_normalize(mpz_class(-3));
        CHECK(u == -1);
        CHECK(c == 3);
        auto [u0, c0] = z.unit_normalize(mpz_class(0));
        CHECK(u0 == 1);
        CHECK(c0 == 0);
        CHECK(unit_inv(z, mpz_class(-1)) == -1);
        CHECK_THROWS_AS(unit_inv(z, mpz_class(2)), InternalError);
    }

    SECTION("divides and exact_div") {
        CHECK(divides(z, mpz_class(3), mpz_class(-9)));
        CHECK_FALSE(divides(z, mpz_class(4), mpz_class(-9)));
        CHECK(exact_div(z, mpz_class(-9), mpz_class(3)) == -3);
        CHECK_THROWS_AS(exact_div(z, mpz_class(7), mpz_class(2)), InternalError);
    }

    SECTION("parsing") {
        CHECK(*z.parse("-42") == -42);
        CHECK(*z.parse("+7") == 7);
        CHECK_FALSE(z.parse("1/2").has_value());
        CHECK_FALSE(z.parse("").has_value());
        CHECK_FALSE(z.parse("2x").has_value());
        CHECK(z.to_string(mpz_class(-42)) == "-42");
    }
}

TEST_CASE("rational field arithmetic", "[rings]") {
    RationalField q;

    SECTION("division is exact, remainder zero") {
        ptest::Rng rng(102);
        for (int it = 0; it < 3000; ++it) {
            mpq_class a = ptest::rand_mpq(rng);
            mpq_class b = ptest::rand_nonzero_mpq(rng);
            auto [quot, rem] = q.div_rem(a, b);
            CHECK(sgn(rem) == 0);
            CHECK(a == quot * b);
        }
    }

    SECTION("every nonzero element is a unit with canonical associate 1") {
        auto [u, c] = q.unit_normalize(mpq_class(-3, 4));
        CHECK(u == mpq_class(-3, 4));
        CHECK(c == 1);
        CHECK(q.inv(mpq_class(2, 3)) == mpq_class(3, 2));
        CHECK_THROWS_AS(q.inv(mpq_class(0)), InternalError);
    }

    SECTION("parsing canonicalizes") {
        CHECK(*q.parse("2/4") == mpq_class(1, 2));
        CHECK(q.to_string(*q.parse("2/4")) == "1/2");
        CHECK(*q.parse("-6/-4") == mpq_class(3, 2));
        CHECK(*q.parse("5") == 5);
        CHECK_FALSE(q.parse("1/0").has_value());
        CHECK_FALSE(q.parse("3/").has_value());
        CHECK_FALSE(q.parse("/3").has_value());
        CHECK_FALSE(q.parse("a").has_value());
    }
}

TEST_CASE("prime field construction and arithmetic", "[rings]") {
    SECTION("modulus validation") {
        CHECK_THROWS_AS(PrimeField(0), ValidationError);
        CHECK_THROWS_AS(PrimeField(1), ValidationError);
        CHECK_THROWS_AS(PrimeField(9), ValidationError);
        CHECK_THROWS_AS(PrimeField(65536), ValidationError);
        CHECK_THROWS_AS(PrimeField(65537), ValidationError);
        CHECK(PrimeField(2).modulus() == 2);
        CHECK(PrimeField(7).modulus() == 7);
        CHECK(PrimeField(65521).modulus() == 65521);
    }

    SECTION("inverses over Z_7, exhaustive") {
        PrimeField f(7);
        for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }

    SECTION("inverses over the largest supported prime, random") {
        PrimeField f(65521);
        ptest::Rng rng(103);
        for (int it = 0; it < 3000; ++it) {
            auto a = ptest::rand_nonzero_field_elem(f, rng);
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }

    SECTION("parse reduces modulo p") {
        PrimeField f(5);
        CHECK(*f.parse("7") == 2);
        CHECK(*f.parse("-1") == 4);
        CHECK(*f.parse("-13") == 2);
        CHECK_FALSE(f.parse("1/2").has_value());
    }

    SECTION("subtraction and negation stay in range") {
        PrimeField f(2);
        CHECK(f.sub(0, 1) == 1);
        CHECK(f.negate(1) == 1);
        CHECK(f.negate(0) == 0);
        CHECK(f.add(1, 1) == 0);
    }
}

TEST_CASE("polynomial ring over Q", "[rings]") {
    RationalField base;
    PolynomialRing<RationalField> ring(base);

    SECTION("long division example") {
        auto a = *ring.parse("x^3+1");
        auto b = *ring.parse("x^2");
        auto [q, r] = ring.div_rem(a, b);
        CHECK(ring.eq(q, *ring.parse("x")));
        CHECK(ring.eq(r, ring.one()));
    }

    SECTION("random division contract over Q[x] and Z5[x]") {
        ptest::Rng rng(104);
        for (int it = 0; it < 1500; ++it) {
            auto a = ptest::rand_poly(ring, rng);
            auto b = ptest::rand_nonzero_poly(ring, rng);
            check_div_rem_contract(ring, a, b);
        }
        PolynomialRing<PrimeField> ring5{PrimeField(5)};
        for (int it = 0; it < 1500; ++it) {
            auto a = ptest::rand_poly(ring5, rng);
            auto b = ptest::rand_nonzero_poly(ring5, rng);
            check_div_rem_contract(ring5, a, b);
        }
    }

    SECTION("homogeneous degree") {
        CHECK(ring.degh(*ring.parse("3x^2")) == 2u);
        CHECK(ring.degh(ring.one()) == 0u);
        CHECK_FALSE(ring.degh(*ring.parse("x+x^2")).has_value());
        CHECK_FALSE(ring.degh(ring.zero()).has_value());
    }

    SECTION("monomial divisibility follows the degree order") {
        ptest::Rng rng(105);
        for (int it = 0; it < 500; ++it) {
            unsigned d = static_cast<unsigned>(ptest::rand_int(rng, 0, 6));
            unsigned e = static_cast<unsigned>(ptest::rand_int(rng, 0, 6));
            auto a = ring.monomial(ptest::rand_nonzero_mpq(rng), d);
            auto b = ring.monomial(ptest::rand_nonzero_mpq(rng), e);
            CHECK(divides(ring, a, b) == (d <= e));
        }
    }

    SECTION("units are the nonzero constants; canonical associates are monic") {
        CHECK(ring.is_unit(*ring.parse("-2")));
        CHECK_FALSE(ring.is_unit(*ring.parse("x")));
        CHECK_FALSE(ring.is_unit(ring.zero()));
        auto [u, c] = ring.unit_normalize(*ring.parse("-2x^3"));
        CHECK(ring.eq(u, *ring.parse("-2")));
        CHECK(ring.eq(c, *ring.parse("x^3")));
        auto [u0, c0] = ring.unit_normalize(ring.zero());
        CHECK(ring.eq(u0, ring.one()));
        CHECK(ring.eq(c0, ring.zero()));
    }

    SECTION("parse and print round trips") {
        for (const char* s : {"x^3-2x+1", "-1/2x^2", "1", "0", "x", "-x", "2/3x^5+1/3"}) {
            auto f = ring.parse(s);
            REQUIRE(f.has_value());
            CHECK(ring.to_string(*f) == s);
        }
        CHECK(ring.eq(*ring.parse("x+x"), *ring.parse("2x")));
        CHECK(ring.eq(*ring.parse("x-x"), ring.zero()));
        CHECK_FALSE(ring.parse("x^").has_value());
        CHECK_FALSE(ring.parse("++1").has_value());
        CHECK_FALSE(ring.parse("").has_value());
        CHECK_FALSE(ring.parse("x^x").has_value());
        CHECK_FALSE(ring.parse("y").has_value());
    }

    SECTION("random print-parse round trip") {
        ptest::Rng rng(106);
        for (int it = 0; it < 1000; ++it) {
            auto f = ptest::rand_poly(ring, rng);
            auto back = ring.parse(ring.to_string(f));
            REQUIRE(back.has_value());
            CHECK(ring.eq(f, *back));
        }
    }
}

TEST_CASE("ring and field codes", "[rings]") {
    SECTION("ring codes") {
        CHECK(std::holds_alternative<IntegerRing>(*parse_ring_code("z")));
        CHECK(std::holds_alternative<RationalField>(*parse_ring_code("q")));
        CHECK(std::holds_alternative<PolynomialRing<RationalField>>(*parse_ring_code("qx")));
        auto zp = parse_ring_code("z7");
        REQUIRE(zp.has_value());
        CHECK(std::get<PrimeField>(*zp).modulus() == 7);
        auto zpx = parse_ring_code("z7x");
        REQUIRE(zpx.has_value());
        CHECK(std::get<PolynomialRing<PrimeField>>(*zpx).coefficient_field().modulus() == 7);
        CHECK_FALSE(parse_ring_code("zz").has_value());
        CHECK_FALSE(parse_ring_code("Q").has_value());
        CHECK_FALSE(parse_ring_code("").has_value());
        CHECK_THROWS_AS(parse_ring_code("z9"), ValidationError);
    }

    SECTION("field codes") {
        CHECK(std::holds_alternative<RationalField>(*parse_field_code("q")));
        auto zp = parse_field_code("z65521");
        REQUIRE(zp.has_value());
        CHECK(std::get<PrimeField>(*zp).modulus() == 65521);
        CHECK_FALSE(parse_field_code("z").has_value());
        CHECK_FALSE(parse_field_code("qx").has_value());
        CHECK_THROWS_AS(parse_field_code("z6"), ValidationError);
    }
}
