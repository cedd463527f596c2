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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace zpr {

/// Dense univariate polynomial in d over Z_{p^r}. Coefficients are stored as
/// canonical representatives; the vector is always normalized so that the
/// last stored coefficient is nonzero (the zero polynomial stores nothing).
///
/// degree() returns -1 for the zero polynomial; -1 stands for "minus
/// infinity" and is never a valid degree of a nonzero polynomial.
class Poly {
   public:
    explicit Poly(const RingSpec& ring) : ring_(ring) {}
    Poly(const RingSpec& ring, std::vector<std::int64_t> coeffs);

    static Poly constant(const RingSpec& ring, std::int64_t c);
    static Poly monomial(const RingSpec& ring, std::int64_t c, int power);

    const RingSpec& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of d^i; zero beyond the degree.
    std::int64_t coeff(int i) const noexcept {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    ZprElem coeff_elem(int i) const { return ZprElem(coeff(i), ring_); }
    std::int64_t leading_coeff() const noexcept { return is_zero() ? 0 : coeffs_.back(); }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

    bool operator==(const Poly& o) const {
        ring_.check_same(o.ring_);
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// c * this.
    Poly scaled(std::int64_t c) const;
    /// this * d^s.
    Poly shifted(int s) const;

    /// Number of nonzero coefficients.
    int weight() const noexcept;

   private:
    void normalize();

    RingSpec ring_;
    std::vector<std::int64_t> coeffs_;
};

/// Coefficientwise reduction mod p, mapping Z_{p^r}[d] to Z_p[d]. The degree
/// may drop.
Poly project_p(const Poly& a);

/// Embeds a polynomial over Z_p into a larger ring with the same prime by
/// keeping its digit coefficients verbatim.
Poly lift_digits(const Poly& a, const RingSpec& target);

/// Quotient and remainder over the field Z_p; divisor must be nonzero.
std::pair<Poly, Poly> divmod_field(const Poly& a, const Poly& b);

/// Monic greatest common divisor over the field Z_p (Euclid). Throws BothZero
/// when both inputs vanish.
Poly gcd_over_field(const Poly& a, const Poly& b);

/// Formal power series over Z_{p^r} truncated at a fixed horizon T: exactly
/// T+1 coefficients are stored and arithmetic discards powers above T.
class TruncatedSeries {
   public:
    TruncatedSeries(const RingSpec& ring, int horizon);
    static TruncatedSeries from_poly(const Poly& p, int horizon);

    const RingSpec& ring() const noexcept { return ring_; }
    int horizon() const noexcept { return horizon_; }
    std::int64_t coeff(int i) const noexcept {
        if (i < 0 || i > horizon_) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    void set_coeff(int i, std::int64_t v);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Poly& p) const;
    TruncatedSeries scaled(std::int64_t c) const;

    /// Restriction to a smaller horizon.
    TruncatedSeries truncated(int new_horizon) const;

    /// Number of nonzero stored coefficients.
    int weight() const noexcept;
    /// Index of the last nonzero stored coefficient, -1 if all are zero.
    int max_nonzero_index() const noexcept;

    bool operator==(const TruncatedSeries& o) const {
        ring_.check_same(o.ring_);
        return horizon_ == o.horizon_ && coeffs_ == o.coeffs_;
    }

   private:
    RingSpec ring_;
    int horizon_;
    std::vector<std::int64_t> coeffs_;
};

/// Series inverse of q modulo d^{T+1}; requires q(0) to be a unit.
TruncatedSeries series_inverse(const Poly& q, int horizon);

/// Order of a polynomial vector: the largest ord over all coefficients,
/// zero iff the vector is zero.
int ord_vector(std::span<const Poly> w);

/// Total Hamming weight of a polynomial vector: the number of nonzero scalar
/// coefficients across all entries and degrees.
int vector_weight(std::span<const Poly> w);

/// Parses the term syntax `c`, `c*d`, `c*d^k`, `d`, `d^k` joined by `+`.
/// Whitespace is ignored, coefficients are decimal integers reduced mod p^r,
/// duplicate powers sum. On failure throws ParseError with a 1-based column.
Poly parse_poly(std::string_view text, const RingSpec& ring);

/// Canonical rendering of the same syntax: ascending powers, nonzero terms
/// only, `0` for the zero polynomial.
std::string to_string(const Poly& p);

/// Rendering of the stored coefficients of a truncated series, same term
/// syntax as polynomials.
std::string to_string(const TruncatedSeries& s);

}  // namespace zpr
