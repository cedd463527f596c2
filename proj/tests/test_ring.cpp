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

#include <random>

#include "zpr/poly.hpp"
#include "zpr/ring.hpp"

using namespace zpr;

namespace {

// every (p, r) with p prime <= 19 and p^r <= 512
std::vector<RingSpec> small_rings() {
    std::vector<RingSpec> rings;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) {
        std::int64_t m = p;
        int r = 1;
        while (m <= 512) {
            rings.emplace_back(p, r);
            m *= p;
            ++r;
        }
    }
    return rings;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("construction validates the ring parameters") {
    CHECK_THROWS_AS(RingSpec(4, 1), InvalidRing);
    CHECK_THROWS_AS(RingSpec(1, 1), InvalidRing);
    CHECK_THROWS_AS(RingSpec(2, 0), InvalidRing);
    CHECK_THROWS_AS(RingSpec(2, 40), InvalidRing);  // p^r past 2^31
    RingSpec z8(2, 3);
    CHECK(z8.modulus() == 8);
    CHECK(z8.residue_field().modulus() == 2);
}

TEST_CASE("arithmetic at the modulus cap") {
    RingSpec big(2, 31);
    CHECK(big.modulus() == (std::int64_t(1) << 31));
    CHECK_THROWS_AS(RingSpec(2, 32), InvalidRing);
    std::int64_t odd = (std::int64_t(1) << 31) - 12345;  // odd, hence a unit
    CHECK(big.mul(odd, big.inv_unit_value(odd)) == 1);
    CHECK(big.valuation(std::int64_t(1) << 30) == 30);
    CHECK(big.ord_value(std::int64_t(1) << 30) == 1);
    CHECK(big.mul(std::int64_t(1) << 30, 2) == 0);
}

TEST_CASE("p-adic digits of the worked examples") {
    RingSpec z4(2, 2), z8(2, 3), z9(3, 2);
    CHECK(padic_expand(ZprElem(3, z4)) == std::vector<std::int64_t>{1, 1});
    CHECK(padic_expand(ZprElem(6, z8)) == std::vector<std::int64_t>{0, 1, 1});
    CHECK(padic_expand(ZprElem(5, z9)) == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("unit predicate on the worked examples") {
    RingSpec z4(2, 2), z9(3, 2);
    CHECK_FALSE(is_unit(ZprElem(2, z4)));
    CHECK(is_unit(ZprElem(3, z4)));
    CHECK_FALSE(is_unit(ZprElem(6, z9)));
}

TEST_CASE("unit inverses") {
    RingSpec z4(2, 2), z8(2, 3), z9(3, 2);
    CHECK(inv_unit(ZprElem(3, z4)).value() == 3);
    CHECK(inv_unit(ZprElem(1, z8)).value() == 1);
    // oracle: scan all residues for 2x = 1 mod 9
    std::int64_t expected = -1;
    for (std::int64_t x = 0; x < 9; ++x) {
        if (2 * x % 9 == 1) expected = x;
    }
    CHECK(expected == 5);
    CHECK(inv_unit(ZprElem(2, z9)).value() == expected);
    CHECK_THROWS_AS(inv_unit(ZprElem(2, z4)), NotAUnit);
}

TEST_CASE("order of elements") {
    RingSpec z4(2, 2);
    CHECK(ord_elem(ZprElem(2, z4)) == 1);
    CHECK(ord_elem(ZprElem(3, z4)) == 2);
    CHECK(ord_elem(ZprElem(0, z4)) == 0);
}

TEST_CASE("order of polynomial vectors") {
    RingSpec z4(2, 2), z8(2, 3);
    std::vector<Poly> a{Poly(z4, {2}), Poly(z4, {0, 2})};
    CHECK(ord_vector(a) == 1);
    std::vector<Poly> b{Poly(z4, {1, 2}), Poly(z4)};
    CHECK(ord_vector(b) == 2);
    std::vector<Poly> c{Poly(z8, {0, 0, 4})};
    CHECK(ord_vector(c) == 1);
    std::vector<Poly> zero{Poly(z4), Poly(z4)};
    CHECK(ord_vector(zero) == 0);
}

TEST_CASE("exhaustive: p-adic recomposition is the identity") {
    for (const RingSpec& ring : small_rings()) {
        for (std::int64_t a = 0; a < ring.modulus(); ++a) {
            auto digits = ring.padic_digits(a);
            REQUIRE(static_cast<int>(digits.size()) == ring.r());
            for (auto d : digits) {
                REQUIRE(d >= 0);
                REQUIRE(d < ring.p());
            }
            REQUIRE(padic_recompose(ring, digits).value() == a);
        }
    }
}

TEST_CASE("exhaustive: unit <=> full order <=> invertible") {
    for (const RingSpec& ring : small_rings()) {
        for (std::int64_t a = 0; a < ring.modulus(); ++a) {
            ZprElem e(a, ring);
            bool unit = is_unit(e);
            REQUIRE(unit == (ord_elem(e) == ring.r()));
            if (unit) {
                REQUIRE(ring.mul(a, inv_unit(e).value()) == 1);
            } else {
                REQUIRE_THROWS_AS(inv_unit(e), NotAUnit);
            }
            if (a != 0) REQUIRE(ord_elem(e) == ring.r() - ring.valuation(a));
        }
    }
}

TEST_CASE("order definition holds literally for vectors") {
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(2, 3), RingSpec(3, 2)};
    std::mt19937 rng(1234);
    for (const RingSpec& ring : rings) {
        std::uniform_int_distribution<std::int64_t> dist(0, ring.modulus() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Poly> w;
            for (int e = 0; e < 3; ++e) {
                std::vector<std::int64_t> coeffs{dist(rng), dist(rng), dist(rng)};
                w.emplace_back(ring, std::move(coeffs));
            }
            int ell = ord_vector(w);
            std::int64_t p_ell = 1;
            for (int i = 0; i < ell; ++i) p_ell *= ring.p();
            bool all_zero = true;
            for (const Poly& e : w) {
                if (!e.scaled(p_ell).is_zero()) all_zero = false;
            }
            REQUIRE(all_zero);
            if (ell > 0) {
                bool some_nonzero = false;
                for (const Poly& e : w) {
                    if (!e.scaled(p_ell / ring.p()).is_zero()) some_nonzero = true;
                }
                REQUIRE(some_nonzero);
            }
        }
    }
}

TEST_CASE("cross-ring operations are rejected") {
    RingSpec z4(2, 2), z8(2, 3);
    CHECK_THROWS_AS(ZprElem(1, z4) + ZprElem(1, z8), RingMismatch);
    CHECK_THROWS_AS(Poly(z4, {1}) * Poly(z8, {1}), RingMismatch);
}

}  // TEST_SUITE
