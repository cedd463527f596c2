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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "errors.hpp"

namespace zpr {

/// The ring Z_{p^r} of integers modulo a prime power. Carries the raw modular
/// arithmetic on canonical representatives in [0, p^r); everything else in the
/// library is built on top of these operations.
///
/// Construction validates that p is prime (trial division), r >= 1, and
/// p^r <= 2^31 so that all products of representatives fit in 64-bit
/// intermediates.
class RingSpec {
   public:
    RingSpec(std::int64_t p, int r);

    std::int64_t p() const noexcept { return p_; }
    int r() const noexcept { return r_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    bool is_field() const noexcept { return r_ == 1; }

    /// The residue field Z_p this ring projects onto.
    RingSpec residue_field() const { return RingSpec(p_, 1); }

    bool operator==(const RingSpec& other) const noexcept {
        return p_ == other.p_ && r_ == other.r_;
    }
    bool operator!=(const RingSpec& other) const noexcept { return !(*this == other); }

    /// Throws RingMismatch unless the two rings agree.
    void check_same(const RingSpec& other) const;

    // Raw arithmetic on representatives. Inputs may be any int64; outputs are
    // always canonical in [0, modulus).
    std::int64_t reduce(std::int64_t v) const noexcept {
        std::int64_t x = v % modulus_;
        return x < 0 ? x + modulus_ : x;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
        return reduce(reduce(a) + reduce(b));
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
        return reduce(reduce(a) - reduce(b));
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
        return reduce(reduce(a) * reduce(b));
    }
    std::int64_t neg(std::int64_t a) const noexcept { return reduce(-reduce(a)); }

    bool is_unit_value(std::int64_t a) const noexcept { return reduce(a) % p_ != 0; }

    /// Multiplicative inverse of a unit; throws NotAUnit otherwise.
    std::int64_t inv_unit_value(std::int64_t a) const;

    /// p-adic valuation of the canonical representative; the valuation of 0
    /// is r by convention.
    int valuation(std::int64_t a) const noexcept;

    /// ord(a): the exponent l such that a*Z_{p^r} has p^l elements.
    /// Equals r - valuation(a); ord(0) = 0.
    int ord_value(std::int64_t a) const noexcept { return r_ - valuation(a); }

    /// Digits [a_0, ..., a_{r-1}] of a = sum a_i p^i, each in {0, ..., p-1}.
    std::vector<std::int64_t> padic_digits(std::int64_t a) const;

   private:
    std::int64_t p_;
    int r_;
    std::int64_t modulus_;
};

/// A single element of Z_{p^r} together with its ring. Mixing elements from
/// different rings throws RingMismatch; there is no implicit coercion.
class ZprElem {
   public:
    ZprElem(std::int64_t value, const RingSpec& ring) : ring_(ring), value_(ring.reduce(value)) {}

    std::int64_t value() const noexcept { return value_; }
    const RingSpec& ring() const noexcept { return ring_; }

    ZprElem operator+(const ZprElem& o) const {
        ring_.check_same(o.ring_);
        return ZprElem(ring_.add(value_, o.value_), ring_);
    }
    ZprElem operator-(const ZprElem& o) const {
        ring_.check_same(o.ring_);
        return ZprElem(ring_.sub(value_, o.value_), ring_);
    }
    ZprElem operator*(const ZprElem& o) const {
        ring_.check_same(o.ring_);
        return ZprElem(ring_.mul(value_, o.value_), ring_);
    }
    ZprElem operator-() const { return ZprElem(ring_.neg(value_), ring_); }

    bool operator==(const ZprElem& o) const {
        ring_.check_same(o.ring_);
        return value_ == o.value_;
    }
    bool operator!=(const ZprElem& o) const { return !(*this == o); }

   private:
    RingSpec ring_;
    std::int64_t value_;
};

/// The unique digits [a_0, ..., a_{r-1}] with a = sum a_i p^i.
std::vector<std::int64_t> padic_expand(const ZprElem& a);

/// Inverse of padic_expand.
ZprElem padic_recompose(const RingSpec& ring, std::span<const std::int64_t> digits);

/// True iff a is invertible, i.e. a mod p != 0.
bool is_unit(const ZprElem& a);

/// Inverse of a unit; throws NotAUnit when a mod p = 0.
ZprElem inv_unit(const ZprElem& a);

/// ord(a) in [0, r]; see RingSpec::ord_value.
int ord_elem(const ZprElem& a);

}  // namespace zpr
