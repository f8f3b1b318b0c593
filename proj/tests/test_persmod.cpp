#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pershom/barcode.hpp"
#include "pershom/persmod.hpp"
#include "testutil.hpp"

using namespace pershom;

namespace {

Filtration square() {
    return parse_filtration_text(ptest::read_file(ptest::fixture_path("square.flt"))).filt;
}

template <FieldRing F>
FiniteTypePersMod<F> sum_of_intervals(const F& field, const std::vector<Interval>& intervals,
                                      unsigned horizon) {
    auto out = zero_module(field, horizon);
    for (const auto& j : intervals) out = direct_sum(out, interval_module(field, j, horizon));
    return out;
}

std::vector<Interval> intervals_of(const std::vector<Bar<RationalField>>& bars) {
    std::vector<Interval> out;
    for (const auto& b : bars) out.push_back(b.interval);
    return out;
}

Interval rand_interval(ptest::Rng& rng) {
    unsigned birth = static_cast<unsigned>(ptest::rand_int(rng, 0, 4));
    if (ptest::rand_int(rng, 0, 1) == 0) return Interval{birth, std::nullopt};
    return Interval{birth, birth + static_cast<unsigned>(ptest::rand_int(rng, 1, 3))};
}

}  // namespace

TEST_CASE("interval modules", "[persmod]") {
    RationalField q;

    SECTION("essential interval is constant") {
        auto M = interval_module(q, Interval{0, std::nullopt}, 3);
        validate_persmod(M);
        CHECK(M.horizon == 3);
        CHECK(M.dims == std::vector<std::size_t>{1, 1, 1, 1});
        for (unsigned t = 0; t <= 3; ++t)
            for (unsigned s = t; s <= 3; ++s) CHECK(rank_map(M, t, s) == 1);
        CHECK(rank_map(M, 2, 9) == 1);  // constant beyond the horizon
    }

    SECTION("finite interval switches on and off") {
        auto M = interval_module(q, Interval{1, 3}, 4);
        CHECK(M.dims == std::vector<std::size_t>{0, 1, 1, 0, 0});
        CHECK(rank_map(M, 1, 2) == 1);
        CHECK(rank_map(M, 1, 3) == 0);
        CHECK(rank_map(M, 0, 1) == 0);
        CHECK(rank_map(M, 2, 2) == 1);
        CHECK(check_interval_decomposition(M, {Interval{1, 3}}));
    }

    SECTION("horizon extends to cover the interval") {
        auto M = interval_module(q, Interval{2, 5}, 1);
        CHECK(M.horizon == 5);
        CHECK(M.dims == std::vector<std::size_t>{0, 0, 1, 1, 1, 0});
    }

    SECTION("degenerate intervals are rejected") {
        CHECK_THROWS_AS(interval_module(q, Interval{3, 3}, 5), ValidationError);
        CHECK_THROWS_AS(interval_module(q, Interval{4, 2}, 5), ValidationError);
    }
}

TEST_CASE("module plumbing", "[persmod]") {
    RationalField q;

    SECTION("zero module") {
        auto Z = zero_module(q, 4);
        validate_persmod(Z);
        CHECK(Z.dims == std::vector<std::size_t>(5, 0));
        CHECK(check_interval_decomposition(Z, {}));
        CHECK_FALSE(check_interval_decomposition(Z, {Interval{0, 1}}));
    }

    SECTION("direct sum adds dimensions and ranks") {
        auto M = direct_sum(interval_module(q, Interval{0, 2}, 3),
                            interval_module(q, Interval{1, 3}, 3));
        CHECK(M.dims == std::vector<std::size_t>{1, 2, 1, 0});
        CHECK(rank_map(M, 0, 1) == 1);
        CHECK(rank_map(M, 1, 2) == 1);
        CHECK(rank_map(M, 0, 2) == 0);
        CHECK(check_interval_decomposition(M, {Interval{0, 2}, Interval{1, 3}}));
    }

    SECTION("summing with the zero module changes nothing") {
        auto M = interval_module(q, Interval{1, 3}, 4);
        auto S = direct_sum(M, zero_module(q, 2));
        CHECK(S.dims == M.dims);
        CHECK(check_interval_decomposition(S, {Interval{1, 3}}));
    }

    SECTION("validation rejects malformed modules") {
        FiniteTypePersMod<RationalField> bad{q, 2, {1, 1}, {}};
        CHECK_THROWS_AS(validate_persmod(bad), ValidationError);
        FiniteTypePersMod<RationalField> bad2{
            q, 1, {1, 1}, {Matrix<RationalField>(q, 2, 1)}};
        CHECK_THROWS_AS(validate_persmod(bad2), ValidationError);
    }

    SECTION("rank queries require ordered indices") {
        auto M = interval_module(q, Interval{0, std::nullopt}, 3);
        CHECK_THROWS_AS(rank_map(M, 2, 1), ValidationError);
    }
}

TEST_CASE("oracle homology of the square filtration", "[persmod]") {
    RationalField q;
    auto filt = square();

    SECTION("pointwise dimensions") {
        auto M0 = from_filtration(filt, 0, q);
        CHECK(M0.dims == std::vector<std::size_t>{2, 2, 1, 1, 1, 1});
        auto M1 = from_filtration(filt, 1, q);
        CHECK(M1.dims == std::vector<std::size_t>{0, 0, 1, 2, 1, 0});
        auto M2 = from_filtration(filt, 2, q);
        CHECK(M2.dims == std::vector<std::size_t>(6, 0));
    }

    SECTION("barcode intervals have the module's rank fingerprint") {
        for (std::size_t n = 0; n <= 2; ++n) {
            auto M = from_filtration(filt, n, q);
            auto bars = persistent_homology(filt, n, q);
            CHECK(check_interval_decomposition(M, intervals_of(bars)));
        }
    }

    SECTION("perturbed interval lists fail the fingerprint") {
        auto M = from_filtration(filt, 0, q);
        auto good = intervals_of(persistent_homology(filt, 0, q));
        auto missing = good;
        missing.pop_back();
        CHECK_FALSE(check_interval_decomposition(M, missing));
        auto extra = good;
        extra.push_back(Interval{4, 5});
        CHECK_FALSE(check_interval_decomposition(M, extra));
        auto shifted = good;
        shifted[0] = Interval{shifted[0].birth, *shifted[0].death + 1};
        CHECK_FALSE(check_interval_decomposition(M, shifted));
    }

    SECTION("inclusion ranks match both the module and the bar counting") {
        for (std::size_t n = 0; n <= 1; ++n) {
            auto M = from_filtration(filt, n, q);
            auto bars = persistent_homology(filt, n, q);
            for (unsigned t = 0; t <= filt.horizon; ++t)
                for (unsigned s = t; s <= filt.horizon; ++s) {
                    const auto r = rank_inclusion(filt, n, q, t, s);
                    CHECK(r == rank_map(M, t, s));
                    std::size_t count = 0;
                    for (const auto& b : bars)
                        if (b.interval.contains_range(t, s)) ++count;
                    CHECK(r == count);
                }
        }
        CHECK_THROWS_AS(rank_inclusion(filt, 0, q, 3, 1), ValidationError);
    }

    SECTION("prime field oracle agrees on this torsion-free example") {
        PrimeField z2(2);
        auto M0 = from_filtration(filt, 0, z2);
        CHECK(M0.dims == std::vector<std::size_t>{2, 2, 1, 1, 1, 1});
        CHECK(check_interval_decomposition(
            M0, intervals_of(persistent_homology(filt, 0, q))));
    }
}

TEST_CASE("interval sums carry exactly their own fingerprint", "[persmod][prop]") {
    RationalField q;
    ptest::Rng rng(601);
    for (int it = 0; it < 20; ++it) {
        std::vector<Interval> intervals;
        const int k = ptest::rand_int(rng, 0, 4);
        for (int i = 0; i < k; ++i) intervals.push_back(rand_interval(rng));
        auto M = sum_of_intervals(q, intervals, 6);
        CHECK(check_interval_decomposition(M, intervals));

        auto extra = intervals;
        extra.push_back(rand_interval(rng));
        CHECK_FALSE(check_interval_decomposition(M, extra));

        if (!intervals.empty()) {
            auto missing = intervals;
            missing.erase(missing.begin() + ptest::rand_int(rng, 0, static_cast<int>(missing.size()) - 1));
            CHECK_FALSE(check_interval_decomposition(M, missing));
        }
    }
}

TEST_CASE("oracle validates barcodes of random filtrations", "[persmod][prop]") {
    RationalField q;
    PrimeField z2(2);
    ptest::Rng rng(602);
    for (int it = 0; it < 12; ++it) {
        auto filt = ptest::rand_filtration(rng);
        for (std::size_t n = 0; n <= 2; ++n) {
            auto bars_q = persistent_homology(filt, n, q);
            auto Mq = from_filtration(filt, n, q);
            CHECK(check_interval_decomposition(Mq, intervals_of(bars_q)));

            auto bars_2 = persistent_homology(filt, n, z2);
            auto M2 = from_filtration(filt, n, z2);
            std::vector<Interval> iv2;
            for (const auto& b : bars_2) iv2.push_back(b.interval);
            CHECK(check_interval_decomposition(M2, iv2));

            for (unsigned t = 0; t <= filt.horizon; ++t)
                for (unsigned s = t; s <= filt.horizon; ++s) {
                    const auto r = rank_inclusion(filt, n, q, t, s);
                    std::size_t count = 0;
                    for (const auto& b : bars_q)
                        if (b.interval.contains_range(t, s)) ++count;
                    CHECK(r == count);
                    CHECK(r <= std::min(detail::dims_at(Mq, t), detail::dims_at(Mq, s)));
                }
        }
    }
}
