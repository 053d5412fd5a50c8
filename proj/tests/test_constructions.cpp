#include <catch2/catch_amalgamated.hpp>

#include "qctw/constructions.hpp"

using namespace qctw;

namespace {

const Field f2(2);
const Field f3(3);
const Polynomial g1_binary(f2, {1, 1, 1, 0, 1});
const Polynomial g1_ternary = Polynomial::from_ints(f3, {1, 0, 1, 1, 1, -1, -1, 0, 1, -1, 1});

}  // namespace

TEST_CASE("su2 parameter predictions") {
    const Su2Params a = su2_params(f2, 3, 3);
    CHECK(a.n == 21);
    CHECK(a.k == 6);
    CHECK(a.w1 == 8);
    CHECK(a.w2 == 12);

    const Su2Params b = su2_params(f2, 4, 13);
    CHECK(b.n == 195);
    CHECK(b.k == 8);
    CHECK(b.w1 == 96);
    CHECK(b.w2 == 104);

    const Su2Params c = su2_params(f3, 3, 2);
    CHECK(c.n == 26);
    CHECK(c.k == 6);
    CHECK(c.w1 == 9);
    CHECK(c.w2 == 18);

    CHECK_THROWS_AS(su2_params(f2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(su2_params(f2, 3, 9), std::invalid_argument);   // p > q^t
    CHECK_THROWS_AS(su2_params(f3, 2, 2), std::invalid_argument);   // gcd(q-1, t) != 1
}

TEST_CASE("default multiplier pattern") {
    SECTION("binary t = 3, p = 3: zero block then x^0, x^1") {
        const MultiplierSet m = default_multipliers(f2, 3, 3);
        REQUIRE(m.size() == 3);
        CHECK_FALSE(m[0].has_value());
        CHECK(m[1] == BlockMultiplier{1, 0});
        CHECK(m[2] == BlockMultiplier{1, 1});
    }

    SECTION("ternary t = 3, p = 2") {
        const MultiplierSet m = default_multipliers(f3, 3, 2);
        REQUIRE(m.size() == 2);
        CHECK_FALSE(m[0].has_value());
        CHECK(m[1] == BlockMultiplier{1, 0});
    }

    SECTION("ternary t = 3, p = 15 wraps into the doubled shifts") {
        const MultiplierSet m = default_multipliers(f3, 3, 15);
        REQUIRE(m.size() == 15);
        CHECK_FALSE(m[0].has_value());
        for (std::size_t e = 0; e < 13; ++e) CHECK(m[1 + e] == BlockMultiplier{1, e});
        CHECK(m[14] == BlockMultiplier{2, 0});
    }

    SECTION("binary pattern reproduces shifts 0 .. p-2") {
        for (unsigned p = 2; p <= 8; ++p) {
            const MultiplierSet m = default_multipliers(f2, 3, p);
            REQUIRE(m.size() == p);
            CHECK_FALSE(m[0].has_value());
            for (unsigned j = 1; j < p; ++j) CHECK(m[j] == BlockMultiplier{1, j - 1});
        }
    }

    CHECK_THROWS_AS(default_multipliers(f2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(default_multipliers(f2, 3, 9), std::invalid_argument);
}

TEST_CASE("two-weight builds verify their predicted parameters") {
    SECTION("binary p = 2") {
        const LinearCode code = build_two_weight(g1_binary, 3, default_multipliers(f2, 3, 2));
        CHECK(code.length == 14);
        CHECK(code.dimension == 6);
        const auto weights = weight_distribution(code).nonzero_weights();
        CHECK(weights == std::vector<std::size_t>{4, 8});
    }

    SECTION("binary p = 8") {
        const LinearCode code = build_two_weight(g1_binary, 3, default_multipliers(f2, 3, 8));
        CHECK(code.length == 56);
        CHECK(code.dimension == 6);
        CHECK(weight_distribution(code).nonzero_weights() == std::vector<std::size_t>{28, 32});
    }

    SECTION("ternary (g1, -g1) second row") {
        const MultiplierSet multipliers = {std::nullopt, BlockMultiplier{1, 0}, BlockMultiplier{2, 0}};
        const LinearCode code = build_two_weight(g1_ternary, 3, multipliers);
        CHECK(code.length == 39);
        CHECK(code.dimension == 6);
        CHECK(weight_distribution(code).nonzero_weights() == std::vector<std::size_t>{18, 27});
    }

    SECTION("invalid inputs are rejected up front") {
        CHECK_THROWS_AS(build_two_weight(Polynomial(f2, {1, 1}), 3, default_multipliers(f2, 3, 2)),
                        std::invalid_argument);  // not a simplex generator for t = 3
        const MultiplierSet duplicated = {std::nullopt, BlockMultiplier{1, 0}, BlockMultiplier{1, 0}};
        CHECK_THROWS_AS(build_two_weight(g1_binary, 3, duplicated), std::invalid_argument);
        const MultiplierSet two_zero = {std::nullopt, std::nullopt, BlockMultiplier{1, 0}};
        CHECK_THROWS_AS(build_two_weight(g1_binary, 3, two_zero), std::invalid_argument);
        const MultiplierSet bad_shift = {std::nullopt, BlockMultiplier{1, 7}};
        CHECK_THROWS_AS(build_two_weight(g1_binary, 3, bad_shift), std::invalid_argument);
    }
}

TEST_CASE("grey-rankin parameter formulas") {
    CHECK(gr_params(4, GrVariant::minus) == CodeParams{120, 9, 56});
    CHECK(gr_params(4, GrVariant::plus) == CodeParams{136, 9, 64});
    CHECK(gr_params(2, GrVariant::minus) == CodeParams{6, 5, 2});
    CHECK(gr_params(3, GrVariant::plus) == CodeParams{36, 7, 16});
    CHECK(gr_params(5, GrVariant::minus) == CodeParams{496, 11, 240});
    CHECK(gr_params(5, GrVariant::plus) == CodeParams{528, 11, 256});
    CHECK_THROWS_AS(gr_params(1, GrVariant::minus), std::invalid_argument);
}

TEST_CASE("self-complementary builds") {
    SECTION("minus variant parameters") {
        for (unsigned t : {2u, 3u, 4u, 5u}) {
            const Polynomial g1 = find_simplex_generators(f2, t).front();
            const LinearCode code = build_self_complementary_minus(g1, t);
            const CodeParams expected = gr_params(t, GrVariant::minus);
            CHECK(code.length == expected.n);
            CHECK(code.dimension == expected.k);
            const WeightDistribution dist = weight_distribution(code);
            CHECK(dist.min_nonzero() == expected.d);
            CHECK(is_self_complementary(code));
            CHECK(grey_rankin_met(code.length, dist.min_nonzero(), codeword_count(code)));

            // weight set {0, w1, w2, n} with w1 + w2 = n, counts symmetric
            const auto weights = dist.nonzero_weights();
            REQUIRE(weights.size() == 3);
            CHECK(weights[0] + weights[1] == code.length);
            CHECK(weights[2] == code.length);
            for (const auto& [w, c] : dist.counts) {
                REQUIRE(dist.counts.count(code.length - w) == 1);
                CHECK(dist.counts.at(code.length - w) == c);
            }
        }
    }

    SECTION("plus variant parameters") {
        for (unsigned t : {3u, 4u, 5u}) {
            const Polynomial g1 = find_simplex_generators(f2, t).front();
            const LinearCode code = build_self_complementary_plus(g1, t);
            const CodeParams expected = gr_params(t, GrVariant::plus);
            CHECK(code.length == expected.n);
            CHECK(code.dimension == expected.k);
            const WeightDistribution dist = weight_distribution(code);
            CHECK(dist.min_nonzero() == expected.d);
            CHECK(is_self_complementary(code));
            CHECK(grey_rankin_met(code.length, dist.min_nonzero(), codeword_count(code)));
            for (const auto& [w, c] : dist.counts) {
                REQUIRE(dist.counts.count(code.length - w) == 1);
                CHECK(dist.counts.at(code.length - w) == c);
            }
        }
    }

    SECTION("worked instances") {
        CHECK(build_self_complementary_minus(find_simplex_generators(f2, 2).front(), 2).length == 6);
        const LinearCode t3 = build_self_complementary_minus(g1_binary, 3);
        CHECK(t3.length == 28);
        CHECK(t3.dimension == 7);
        CHECK(min_distance(t3) == 12);
    }

    SECTION("non-binary fields are rejected") {
        CHECK_THROWS_AS(build_self_complementary_minus(g1_ternary, 3), std::invalid_argument);
        CHECK_THROWS_AS(build_self_complementary_plus(g1_ternary, 3), std::invalid_argument);
    }
}

TEST_CASE("built two-weight codes stay quasi-cyclic") {
    const LinearCode code = build_two_weight(g1_binary, 3, default_multipliers(f2, 3, 4));
    CHECK(row_shift_invariance_witness(code, 7, 4));
    const LinearCode plus = build_self_complementary_plus(g1_binary, 3);
    CHECK(row_shift_invariance_witness(plus, 7, 5));  // parity column held fixed
}
