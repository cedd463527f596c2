/*
   Copyright 2026 The zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "testutil.hpp"
#include "zpr/distances.hpp"

using namespace zpr;
using zprtest::Rng;

namespace {

PolyMatrix from_strings(const RingSpec& ring, int rows, int cols,
                        const std::vector<std::string>& entries) {
    PolyMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m.set(i, j, parse_poly(entries[static_cast<std::size_t>(i * cols + j)], ring));
        }
    }
    return m;
}

// brute-force oracle: weight of the lightest truncated codeword over all
// messages with blocks of degree <= j, leading block nonzero
int column_distance_oracle(const ConvCode& code, int j) {
    const RingSpec& ring = code.ring();
    std::int64_t m = ring.modulus();
    int k = code.k();
    std::int64_t total = 1;
    for (int i = 0; i < k * (j + 1); ++i) total *= m;
    int best = 1 << 20;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t rest = idx;
        std::vector<Poly> u;
        bool first_block_nonzero = false;
        for (int i = 0; i < k; ++i) {
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(j) + 1);
            for (int e = 0; e <= j; ++e) {
                coeffs[static_cast<std::size_t>(e)] = rest % m;
                rest /= m;
            }
            if (coeffs[0] != 0) first_block_nonzero = true;
            u.emplace_back(ring, std::move(coeffs));
        }
        if (!first_block_nonzero) continue;
        Codeword w = encode(code, u);
        int weight = 0;
        for (const Poly& entry : w.word) {
            for (int e = 0; e <= j; ++e) weight += (entry.coeff(e) != 0);
        }
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace

TEST_SUITE("distances") {

TEST_CASE("sliding matrix layout") {
    RingSpec z2(2, 1);
    ConvCode code(from_strings(z2, 1, 2, {"1+d", "1"}));

    SlidingMatrix g0 = sliding(code, SlidingKind::generator, 0);
    CHECK(g0.rows() == 1);
    CHECK(g0.cols() == 2);
    CHECK(g0.at(0, 0) == 1);
    CHECK(g0.at(0, 1) == 1);

    SlidingMatrix g1 = sliding(code, SlidingKind::generator, 1);
    CHECK(g1.rows() == 2);
    CHECK(g1.cols() == 4);
    // [[G0 G1], [0 G0]] with G0 = [1 1], G1 = [1 0]
    CHECK(g1.at(0, 0) == 1);
    CHECK(g1.at(0, 1) == 1);
    CHECK(g1.at(0, 2) == 1);
    CHECK(g1.at(0, 3) == 0);
    CHECK(g1.at(1, 0) == 0);
    CHECK(g1.at(1, 1) == 0);
    CHECK(g1.at(1, 2) == 1);
    CHECK(g1.at(1, 3) == 1);

    // beyond the memory the trailing blocks are zero
    SlidingMatrix g3 = sliding(code, SlidingKind::generator, 3);
    CHECK(g3.at(0, 4) == 0);
    CHECK(g3.at(0, 6) == 0);

    SlidingMatrix h1 = sliding(code, SlidingKind::parity, 1);
    CHECK(h1.rows() == 4);
    CHECK(h1.cols() == 2);

    ConvCode bad(from_strings(RingSpec(2, 2), 1, 2, {"1+3*d", "1+d"}));
    CHECK_THROWS_AS(sliding(bad, SlidingKind::parity, 0), Catastrophic);
}

TEST_CASE("column distance bound formula") {
    RingSpec z2(2, 1);
    ConvCode code(from_strings(z2, 1, 2, {"1+d", "1"}));
    CHECK(column_distance_bound(code, 0) == 2);
    CHECK(column_distance_bound(code, 2) == 4);
    ConvCode wide(from_strings(z2, 1, 3, {"1", "d", "1+d"}));
    CHECK(column_distance_bound(wide, 1) == 5);
}

TEST_CASE("column distances of the worked examples") {
    RingSpec z2(2, 1), z4(2, 2);
    ConvCode code(from_strings(z2, 1, 2, {"1+d", "1"}));
    CHECK(column_distance(code, 0) == 2);
    CHECK(column_distance(code, 1) == 3);
    CHECK(column_distance(code, 1) == column_distance_bound(code, 1));

    ConvCode flat(from_strings(z4, 1, 2, {"1", "1"}));
    for (int j = 0; j <= 3; ++j) CHECK(column_distance(flat, j) == 2);

    CHECK(column_distance_via_parity(code, 0) == 2);

    ConvCode bad(from_strings(z4, 1, 2, {"1+3*d", "1+d"}));
    CHECK_THROWS_AS(column_distance(bad, 0), Catastrophic);
}

TEST_CASE("column distance matches the brute-force oracle") {
    Rng rng(131);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2), RingSpec(2, 1)};
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 6; ++trial) {
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1, 2, 2, rng);
            for (int j = 0; j <= 2; ++j) {
                REQUIRE(column_distance(code, j) == column_distance_oracle(code, j));
            }
        }
    }
}

TEST_CASE("generator and parity routes agree; serial equals parallel") {
    Rng rng(139);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2)};
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 6; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1, n, 2, rng);
            for (int j = 0; j <= 2; ++j) {
                int d = column_distance(code, j);
                REQUIRE(d == column_distance_serial(code, j));
                try {
                    int via_parity = column_distance_via_parity(code, j);
                    int via_parity_serial = column_distance_via_parity_serial(code, j);
                    REQUIRE(d == via_parity);
                    REQUIRE(d == via_parity_serial);
                } catch (const SearchTooLarge&) {
                    // n(j+1) digits past the guard; the window is skipped
                }
            }
        }
    }
}

TEST_CASE("free distance of the worked examples") {
    RingSpec z4(2, 2), z2(2, 1);
    ConvCode flat(from_strings(z4, 1, 2, {"1", "1"}));
    CHECK(free_distance(flat).value == 2);
    CHECK_FALSE(free_distance(flat).lower_bound_only);

    ConvCode code(from_strings(z2, 1, 2, {"1+d", "1"}));
    CHECK(free_distance(code).value == 3);
    CHECK(free_distance_bounded(code, 3) == 3);

    ConvCode bad(from_strings(z4, 1, 2, {"1+3*d", "1+d"}));
    FreeDistanceResult fallback = free_distance(bad);
    CHECK(fallback.lower_bound_only);
    CHECK(fallback.value == free_distance_bounded(bad, 4));
    CHECK(fallback.value == 4);  // oracle: every nonzero codeword keeps weight 4
}

TEST_CASE("state space equals bounded enumeration on random codes") {
    Rng rng(149);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2)};
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 10; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1, n, 2, rng);
            int exact = free_distance_state_space(code);
            REQUIRE(exact == free_distance_bounded(code, 4));
            REQUIRE(free_distance_bounded(code, 4) == free_distance_bounded_serial(code, 4));
        }
    }
}

TEST_CASE("singleton bound and L index formulas") {
    RingSpec z4(2, 2);
    ConvCode a(from_strings(z4, 1, 2, {"1", "1"}));
    CHECK(a.b_degree() == 0);
    CHECK(singleton_bound(a) == 2);
    CHECK(L_index(a) == 0);

    ConvCode b(from_strings(z4, 1, 2, {"1+d", "1"}));
    CHECK(singleton_bound(b) == 4);
    CHECK(L_index(b) == 2);

    ConvCode c(from_strings(z4, 1, 3, {"1+d+2*d^2", "1+3*d^2", "1"}));
    CHECK(c.b_degree() == 2);
    CHECK(singleton_bound(c) == 9);

    ConvCode d(from_strings(z4, 2, 3, {"1+d^2", "d", "0", "0", "1+d", "1"}));
    CHECK(d.b_degree() == 3);
    CHECK(L_index(d) == 4);
}

TEST_CASE("mds verdicts") {
    RingSpec z9(3, 2), z2(2, 1), z4(2, 2);
    ConvCode flat(from_strings(z9, 1, 2, {"1", "1"}));
    CHECK(is_mds(flat));

    ConvCode nearly(from_strings(z2, 1, 2, {"1+d", "1"}));
    CHECK_FALSE(is_mds(nearly));  // 3 < 4

    // lift of a field code that meets the bound
    PolyMatrix gp(z2, 2, 3);
    gp = from_strings(z2, 2, 3, {"1", "0", "1", "0", "1", "1"});
    ConvCode lifted = lift_code(gp, z4);
    CHECK(is_mds(ConvCode(gp)));
    CHECK(is_mds(lifted));
}

TEST_CASE("mdp verdicts and the minor criterion") {
    RingSpec z2(2, 1), z3(3, 1), z9(3, 2);
    ConvCode binary(from_strings(z2, 1, 2, {"1+d", "1"}));
    CHECK(column_distance(binary, 0) == 2);
    CHECK(column_distance(binary, 1) == 3);
    CHECK(column_distance(binary, 2) == 3);  // 3 < 4: profile stops short
    CHECK_FALSE(is_mdp(binary));

    // delta = 0: profile is the single distance d_0
    ConvCode flat(from_strings(z9, 1, 2, {"1", "1"}));
    CHECK(L_index(flat) == 0);
    CHECK(is_mdp(flat));

    ConvCode ternary(from_strings(z3, 1, 2, {"1+d", "1+2*d"}));
    CHECK(column_distance(ternary, 0) == 2);
    CHECK(column_distance(ternary, 1) == 3);
    CHECK(column_distance(ternary, 2) == 4);
    CHECK(is_mdp(ternary));
    ConvCode lifted = lift_code(ternary.generator(), z9);
    CHECK(is_mdp(lifted));

    // the criterion mirrors the bound comparison
    for (int j = 0; j <= 2; ++j) {
        bool meets = column_distance(ternary, j) == column_distance_bound(ternary, j);
        REQUIRE(mdp_minor_criterion(ternary, j) == meets);
        REQUIRE(mdp_minor_criterion(ternary, j, SlidingKind::parity) == meets);
    }
    for (int j = 0; j <= 2; ++j) {
        bool meets = column_distance(binary, j) == column_distance_bound(binary, j);
        REQUIRE(mdp_minor_criterion(binary, j) == meets);
        REQUIRE(mdp_minor_criterion(binary, j, SlidingKind::parity) == meets);
    }
}

TEST_CASE("minor criterion agrees with the distance on random codes") {
    Rng rng(151);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2)};
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 8; ++trial) {
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1, 2, 2, rng);
            for (int j = 0; j <= 2; ++j) {
                bool meets = column_distance(code, j) == column_distance_bound(code, j);
                REQUIRE(mdp_minor_criterion(code, j) == meets);
                REQUIRE(mdp_minor_criterion(code, j, SlidingKind::parity) == meets);
            }
        }
    }
}

TEST_CASE("lifting preserves the projection-level facts") {
    Rng rng(157);
    RingSpec z2(2, 1), z4(2, 2), z8(2, 3);
    for (int trial = 0; trial < 12; ++trial) {
        ConvCode field_code = zprtest::random_noncatastrophic_code(z2, 1, 2, 2, rng);
        for (const RingSpec& target : {z4, z8}) {
            ConvCode lifted = lift_code(field_code.generator(), target);
            REQUIRE(lifted.noncatastrophic());
            REQUIRE(lifted.b_degree() == field_code.b_degree());
            REQUIRE(free_distance(lifted).value == free_distance(field_code).value);
            REQUIRE(is_mds(lifted) == is_mds(field_code));
            REQUIRE(is_mdp(lifted) == is_mdp(field_code));
        }
    }
    // catastrophic inputs lift to catastrophic codes
    ConvCode bad = lift_code(from_strings(z2, 1, 2, {"1+d", "1+d"}), z8);
    CHECK_FALSE(bad.noncatastrophic());
    CHECK_THROWS_AS(lift_code(from_strings(RingSpec(3, 1), 1, 2, {"1", "d"}), z4), PrimeMismatch);

    // the identity encoder lifts to the identity encoder
    PolyMatrix eye2 = PolyMatrix::identity(z2, 2);
    CHECK(lift_code(eye2, z4).generator() == PolyMatrix::identity(z4, 2));
}

TEST_CASE("profile invariants on random codes") {
    Rng rng(163);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2)};
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 8; ++trial) {
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1, 2, 2, rng);
            DistanceProfile profile = distance_profile(code, 3);
            int previous = 0;
            for (const auto& entry : profile.column) {
                REQUIRE(entry.distance >= previous);
                REQUIRE(entry.distance <= entry.bound);
                REQUIRE(entry.distance <= profile.d_free.value);
                previous = entry.distance;
            }
            REQUIRE(profile.d_free.value <= profile.singleton);
            REQUIRE(profile.mds == (profile.d_free.value == profile.singleton));
        }
    }
}

TEST_CASE("equivalent encoders share the distance profile") {
    Rng rng(167);
    RingSpec z4(2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        ConvCode code = zprtest::random_noncatastrophic_code(z4, 1, 2, 2, rng);
        PolyMatrix u = zprtest::random_unimodular(z4, 1, 4, rng);
        ConvCode other(u * code.generator());
        REQUIRE(free_distance(code).value == free_distance(other).value);
        for (int j = 0; j <= 2; ++j) {
            REQUIRE(column_distance(code, j) == column_distance(other, j));
        }
    }
}

TEST_CASE("column distances against the projection: measured, not asserted") {
    // Whether d_j^c always coincides with the projected code's is unsettled;
    // this records the observation without failing the build.
    Rng rng(173);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2)};
    int compared = 0, equal = 0;
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 10; ++trial) {
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1, 2, 2, rng);
            ConvCode projected(project_p(code.generator()));
            for (int j = 0; j <= 2; ++j) {
                ++compared;
                equal += (column_distance(code, j) == column_distance(projected, j));
            }
        }
    }
    MESSAGE("projected column distance agreed on ", equal, "/", compared, " windows");
    CHECK(compared == 60);
}

TEST_CASE("search guards fail loudly") {
    RingSpec z512(2, 9);
    // k(j+1) digits of a 512-ary alphabet blow past 10^8 quickly
    ConvCode code(from_strings(z512, 1, 2, {"1", "d"}));
    CHECK_THROWS_AS(column_distance(code, 3), SearchTooLarge);
    CHECK_THROWS_AS(free_distance_bounded(code, 4), SearchTooLarge);
}

}  // TEST_SUITE
