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

#include "zpr/ring.hpp"

#include <string>

namespace zpr {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

RingSpec::RingSpec(std::int64_t p, int r) : p_(p), r_(r) {
    if (!is_prime(p)) throw InvalidRing("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw InvalidRing("r must be >= 1");
    constexpr std::int64_t kMaxModulus = std::int64_t(1) << 31;
    std::int64_t m = 1;
    for (int i = 0; i < r; ++i) {
        if (m > kMaxModulus / p) throw InvalidRing("p^r exceeds 2^31");
        m *= p;
    }
    modulus_ = m;
}

void RingSpec::check_same(const RingSpec& other) const {
    if (*this != other) {
        throw RingMismatch("operands live in Z_" + std::to_string(modulus_) + " and Z_" +
                           std::to_string(other.modulus_));
    }
}

std::int64_t RingSpec::inv_unit_value(std::int64_t a) const {
    std::int64_t x = reduce(a);
    if (x % p_ == 0) {
        throw NotAUnit(std::to_string(x) + " is not a unit of Z_" + std::to_string(modulus_));
    }
    // Extended Euclid on (x, modulus); gcd is 1 since x is coprime to p.
    std::int64_t r0 = x, r1 = modulus_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return reduce(s0);
}

int RingSpec::valuation(std::int64_t a) const noexcept {
    std::int64_t x = reduce(a);
    if (x == 0) return r_;
    int v = 0;
    while (x % p_ == 0) {
        x /= p_;
        ++v;
    }
    return v;
}

std::vector<std::int64_t> RingSpec::padic_digits(std::int64_t a) const {
    std::vector<std::int64_t> digits(static_cast<std::size_t>(r_));
    std::int64_t x = reduce(a);
    for (int i = 0; i < r_; ++i) {
        digits[static_cast<std::size_t>(i)] = x % p_;
        x /= p_;
    }
    return digits;
}

std::vector<std::int64_t> padic_expand(const ZprElem& a) {
    return a.ring().padic_digits(a.value());
}

ZprElem padic_recompose(const RingSpec& ring, std::span<const std::int64_t> digits) {
    std::int64_t acc = 0;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        acc += digits[i] * scale;
        if (i + 1 < digits.size()) scale *= ring.p();
    }
    return ZprElem(acc, ring);
}

bool is_unit(const ZprElem& a) { return a.ring().is_unit_value(a.value()); }

ZprElem inv_unit(const ZprElem& a) {
    return ZprElem(a.ring().inv_unit_value(a.value()), a.ring());
}

int ord_elem(const ZprElem& a) { return a.ring().ord_value(a.value()); }

}  // namespace zpr
