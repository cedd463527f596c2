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

#include <functional>

#include "testutil.hpp"
#include "zpr/convcode.hpp"

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

std::vector<Poly> polys(const RingSpec& ring, const std::vector<std::string>& entries) {
    std::vector<Poly> out;
    for (const auto& e : entries) out.push_back(parse_poly(e, ring));
    return out;
}

// every length-k vector of polynomials with entry degrees <= max_deg
void for_each_message(const RingSpec& ring, int k, int max_deg,
                      const std::function<void(const std::vector<Poly>&)>& fn) {
    int digits = k * (max_deg + 1);
    std::int64_t total = 1;
    for (int i = 0; i < digits; ++i) total *= ring.modulus();
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t rest = idx;
        std::vector<Poly> u;
        for (int i = 0; i < k; ++i) {
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(max_deg) + 1);
            for (int e = 0; e <= max_deg; ++e) {
                coeffs[static_cast<std::size_t>(e)] = rest % ring.modulus();
                rest /= ring.modulus();
            }
            u.emplace_back(ring, std::move(coeffs));
        }
        fn(u);
    }
}

}  // namespace

TEST_SUITE("convcode") {

TEST_CASE("admission of the worked examples") {
    RingSpec z4(2, 2);
    ConvCode plain(from_strings(z4, 1, 2, {"1", "d"}));
    CHECK(plain.noncatastrophic());

    CHECK_THROWS_AS(ConvCode(from_strings(z4, 1, 2, {"2", "2*d"})), NotFullRowRank);

    ConvCode running(from_strings(z4, 1, 2, {"1+3*d", "1+d"}));
    CHECK_FALSE(running.noncatastrophic());
}

TEST_CASE("encoding of the worked examples") {
    RingSpec z4(2, 2);
    ConvCode code(from_strings(z4, 1, 2, {"1", "d"}));
    Codeword zero = encode(code, polys(z4, {"0"}));
    CHECK(zero.word[0].is_zero());
    CHECK(zero.word[1].is_zero());

    Codeword two = encode(code, polys(z4, {"2"}));
    CHECK(to_string(two.word[0]) == "2");
    CHECK(to_string(two.word[1]) == "2*d");
    CHECK(ord_vector(two.word) == 1);

    ConvCode running(from_strings(z4, 1, 2, {"1+3*d", "1+d"}));
    Codeword w = encode(running, polys(z4, {"1+d"}));
    CHECK(to_string(w.word[0]) == "1+3*d^2");
    CHECK(to_string(w.word[1]) == "1+2*d+d^2");
}

TEST_CASE("order is preserved by encoding") {
    Rng rng(77);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(2, 3), RingSpec(3, 2)};
    int done = 0;
    while (done < 1000) {
        const RingSpec& ring = rings[done % 3];
        int k = 1 + static_cast<int>(rng() % 2);
        int n = k + 1 + static_cast<int>(rng() % 2);
        try {
            ConvCode code(zprtest::random_matrix(ring, k, n, 2, rng));
            std::vector<Poly> u;
            for (int i = 0; i < k; ++i) u.push_back(zprtest::random_poly(ring, 2, rng));
            Codeword w = encode(code, u);
            REQUIRE(ord_vector(w.word) == ord_vector(u));
            ++done;
        } catch (const NotFullRowRank&) {
        }
    }
}

TEST_CASE("equivalence of encoders") {
    RingSpec z4(2, 2);
    ConvCode a(from_strings(z4, 1, 2, {"1", "d"}));
    CHECK(equivalent(a, a));

    ConvCode scaled(from_strings(z4, 1, 2, {"3", "3*d"}));
    CHECK(equivalent(a, scaled));
    CHECK(equivalent(scaled, a));

    ConvCode multiple(from_strings(z4, 1, 2, {"1+d", "d+d^2"}));
    CHECK_FALSE(equivalent(a, multiple));

    ConvCode other(from_strings(z4, 1, 2, {"1", "1+d"}));
    CHECK_FALSE(equivalent(a, other));
}

TEST_CASE("equivalent encoders share cached facts") {
    Rng rng(101);
    RingSpec rings[] = {RingSpec(2, 2), RingSpec(3, 2)};
    for (const RingSpec& ring : rings) {
        for (int trial = 0; trial < 20; ++trial) {
            ConvCode code = zprtest::random_noncatastrophic_code(ring, 1 + static_cast<int>(rng() % 2),
                                                                 3, 2, rng);
            PolyMatrix u = zprtest::random_unimodular(ring, code.k(), 5, rng);
            ConvCode other(u * code.generator());
            REQUIRE(equivalent(code, other));
            REQUIRE(code.b_degree() == other.b_degree());
            REQUIRE(code.noncatastrophic() == other.noncatastrophic());
        }
    }
}

TEST_CASE("parity check of the worked examples") {
    RingSpec z4(2, 2);
    ConvCode eye(from_strings(z4, 2, 3, {"1", "0", "0", "0", "1", "0"}));
    const PolyMatrix& h0 = eye.parity_check();
    CHECK(h0.at(0, 0).is_zero());
    CHECK(h0.at(1, 0).is_zero());
    CHECK(h0.at(2, 0) == Poly::constant(z4, 1));

    ConvCode code(from_strings(z4, 1, 2, {"1", "d"}));
    const PolyMatrix& h = code.parity_check();
    CHECK(to_string(h.at(0, 0)) == "3*d");
    CHECK(to_string(h.at(1, 0)) == "1");

    ConvCode running(from_strings(z4, 1, 2, {"1+3*d", "1+d"}));
    CHECK_THROWS_AS(running.parity_check(), Catastrophic);
}

TEST_CASE("kernel membership of the worked examples") {
    RingSpec z4(2, 2);
    ConvCode code(from_strings(z4, 1, 2, {"1", "d"}));
    Codeword w = encode(code, polys(z4, {"1+2*d"}));
    CHECK(kernel_membership(code, w.word));
    CHECK(kernel_membership(code, polys(z4, {"0", "0"})));
    CHECK_FALSE(kernel_membership(code, polys(z4, {"d", "1"})));
}

TEST_CASE("kernel equality at desk scale") {
    Rng rng(113);
    RingSpec z4(2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        int k = 1 + static_cast<int>(rng() % 2);
        int n = k + 1 + static_cast<int>(rng() % (3 - k));
        ConvCode code = zprtest::random_noncatastrophic_code(z4, k, n, 2, rng);
        // every encoding lands in the kernel
        for_each_message(z4, k, 1, [&](const std::vector<Poly>& u) {
            Codeword w = encode(code, u);
            REQUIRE(kernel_membership(code, w.word));
        });
        // every kernel member of bounded degree is an encoding
        const PolyMatrix& right_inv = code.generator_right_inverse();
        for_each_message(z4, n, 1, [&](const std::vector<Poly>& w) {
            if (!kernel_membership(code, w)) return;
            std::vector<Poly> u;
            for (int j = 0; j < code.k(); ++j) {
                Poly acc(z4);
                for (int i = 0; i < code.n(); ++i) {
                    acc = acc + w[static_cast<std::size_t>(i)] * right_inv.at(i, j);
                }
                u.push_back(std::move(acc));
            }
            Codeword back = encode(code, u);
            REQUIRE(back.word == w);
        });
    }
}

TEST_CASE("b-degree of the worked examples") {
    RingSpec z4(2, 2);
    CHECK(ConvCode(from_strings(z4, 1, 2, {"1+2*d", "1"})).b_degree() == 0);
    CHECK(ConvCode(from_strings(z4, 1, 2, {"1+d", "1"})).b_degree() == 1);
    CHECK(ConvCode(from_strings(z4, 2, 3, {"1", "0", "0", "0", "1", "0"})).b_degree() == 0);
}

TEST_CASE("catastrophic demo on the running example") {
    RingSpec z4(2, 2);
    ConvCode running(from_strings(z4, 1, 2, {"1+3*d", "1+d"}));
    CatastrophicDemo demo = catastrophic_demo(running, 8);
    CHECK(to_string(demo.projection_gcd) == "1+d");
    CHECK(demo.input_weight == 9);
    CHECK(demo.input.coeff(0) == 2);
    CHECK(demo.input.coeff(8) == 2);
    CHECK(demo.output_weight == 2);
    CHECK(demo.output_max_degree <= 1);
    for (const auto& entry : demo.output) {
        for (int t = 2; t <= 8; ++t) REQUIRE(entry.coeff(t) == 0);
    }

    ConvCode fine(from_strings(z4, 1, 2, {"1", "d"}));
    CHECK_THROWS_AS(catastrophic_demo(fine, 8), NotCatastrophic);

    ConvCode wide(from_strings(z4, 2, 3,
                               {"1+d", "1+d", "0", "0", "2", "1"}));
    if (!wide.noncatastrophic()) {
        CHECK_THROWS_AS(catastrophic_demo(wide, 8), UnsupportedShape);
    }

    // gcd divisible by d: constant term is no unit
    ConvCode shifted(from_strings(z4, 1, 2, {"d", "d^2"}));
    CHECK_FALSE(shifted.noncatastrophic());
    CHECK_THROWS_AS(catastrophic_demo(shifted, 8), NonUnitConstantGcd);
}

}  // TEST_SUITE
