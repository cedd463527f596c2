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

#include "zpr/poly.hpp"

#include <algorithm>
#include <cctype>

namespace zpr {

Poly::Poly(const RingSpec& ring, std::vector<std::int64_t> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = ring_.reduce(c);
    normalize();
}

Poly Poly::constant(const RingSpec& ring, std::int64_t c) { return Poly(ring, {c}); }

Poly Poly::monomial(const RingSpec& ring, std::int64_t c, int power) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return Poly(ring, std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    ring_.check_same(o.ring_);
    std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = ring_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    }
    return Poly(ring_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    ring_.check_same(o.ring_);
    std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = ring_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    }
    return Poly(ring_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    ring_.check_same(o.ring_);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    std::vector<std::int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            v[i + j] = ring_.add(v[i + j], ring_.mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return Poly(ring_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<std::int64_t> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = ring_.neg(coeffs_[i]);
    return Poly(ring_, std::move(v));
}

Poly Poly::scaled(std::int64_t c) const {
    std::vector<std::int64_t> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = ring_.mul(c, coeffs_[i]);
    return Poly(ring_, std::move(v));
}

Poly Poly::shifted(int s) const {
    if (is_zero()) return *this;
    std::vector<std::int64_t> v(coeffs_.size() + static_cast<std::size_t>(s), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + s);
    return Poly(ring_, std::move(v));
}

int Poly::weight() const noexcept {
    int w = 0;
    for (auto c : coeffs_) w += (c != 0);
    return w;
}

Poly project_p(const Poly& a) {
    RingSpec field = a.ring().residue_field();
    std::vector<std::int64_t> v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs()[i] % a.ring().p();
    return Poly(field, std::move(v));
}

Poly lift_digits(const Poly& a, const RingSpec& target) {
    if (!a.ring().is_field()) throw FieldRequired("lift_digits expects a polynomial over Z_p");
    if (a.ring().p() != target.p()) {
        throw PrimeMismatch("cannot lift from Z_" + std::to_string(a.ring().p()) + " into Z_" +
                            std::to_string(target.modulus()));
    }
    return Poly(target, a.coeffs());
}

std::pair<Poly, Poly> divmod_field(const Poly& a, const Poly& b) {
    a.ring().check_same(b.ring());
    if (!a.ring().is_field()) throw FieldRequired("polynomial division requires Z_p");
    if (b.is_zero()) throw BothZero("division by the zero polynomial");
    const RingSpec& f = a.ring();
    std::int64_t lead_inv = f.inv_unit_value(b.leading_coeff());
    std::vector<std::int64_t> rem = a.coeffs();
    std::vector<std::int64_t> quo;
    if (a.degree() >= b.degree()) {
        quo.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    }
    int rd = a.degree();
    while (rd >= b.degree()) {
        while (rd >= 0 && rem[static_cast<std::size_t>(rd)] == 0) --rd;
        if (rd < b.degree()) break;
        std::int64_t c = f.mul(rem[static_cast<std::size_t>(rd)], lead_inv);
        int shift = rd - b.degree();
        quo[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= b.degree(); ++i) {
            auto idx = static_cast<std::size_t>(shift + i);
            rem[idx] = f.sub(rem[idx], f.mul(c, b.coeff(i)));
        }
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd_over_field(const Poly& a, const Poly& b) {
    a.ring().check_same(b.ring());
    if (!a.ring().is_field()) throw FieldRequired("gcd requires Z_p");
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod_field(x, y).second;
        x = y;
        y = r;
    }
    return x.scaled(a.ring().inv_unit_value(x.leading_coeff()));
}

TruncatedSeries::TruncatedSeries(const RingSpec& ring, int horizon)
    : ring_(ring), horizon_(horizon), coeffs_(static_cast<std::size_t>(horizon) + 1, 0) {
    if (horizon < 0) throw DimensionMismatch("series horizon must be >= 0");
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int horizon) {
    TruncatedSeries s(p.ring(), horizon);
    for (int i = 0; i <= std::min(horizon, p.degree()); ++i) s.coeffs_[static_cast<std::size_t>(i)] = p.coeff(i);
    return s;
}

void TruncatedSeries::set_coeff(int i, std::int64_t v) {
    if (i < 0 || i > horizon_) throw DimensionMismatch("series coefficient index out of range");
    coeffs_[static_cast<std::size_t>(i)] = ring_.reduce(v);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    ring_.check_same(o.ring_);
    if (horizon_ != o.horizon_) throw DimensionMismatch("series horizons differ");
    TruncatedSeries s(ring_, horizon_);
    for (int i = 0; i <= horizon_; ++i) {
        s.coeffs_[static_cast<std::size_t>(i)] = ring_.add(coeff(i), o.coeff(i));
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    ring_.check_same(o.ring_);
    if (horizon_ != o.horizon_) throw DimensionMismatch("series horizons differ");
    TruncatedSeries s(ring_, horizon_);
    for (int i = 0; i <= horizon_; ++i) {
        if (coeff(i) == 0) continue;
        for (int j = 0; i + j <= horizon_; ++j) {
            auto idx = static_cast<std::size_t>(i + j);
            s.coeffs_[idx] = ring_.add(s.coeffs_[idx], ring_.mul(coeff(i), o.coeff(j)));
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const Poly& p) const {
    ring_.check_same(p.ring());
    return *this * TruncatedSeries::from_poly(p, horizon_);
}

TruncatedSeries TruncatedSeries::scaled(std::int64_t c) const {
    TruncatedSeries s(ring_, horizon_);
    for (int i = 0; i <= horizon_; ++i) s.coeffs_[static_cast<std::size_t>(i)] = ring_.mul(c, coeff(i));
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_horizon) const {
    if (new_horizon > horizon_) throw DimensionMismatch("cannot extend a truncated series");
    TruncatedSeries s(ring_, new_horizon);
    for (int i = 0; i <= new_horizon; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeff(i);
    return s;
}

int TruncatedSeries::weight() const noexcept {
    int w = 0;
    for (auto c : coeffs_) w += (c != 0);
    return w;
}

int TruncatedSeries::max_nonzero_index() const noexcept {
    for (int i = horizon_; i >= 0; --i) {
        if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

TruncatedSeries series_inverse(const Poly& q, int horizon) {
    const RingSpec& ring = q.ring();
    if (q.is_zero() || !ring.is_unit_value(q.coeff(0))) {
        throw ConstantTermNotUnit("series inverse needs a unit constant term");
    }
    std::int64_t c0 = ring.inv_unit_value(q.coeff(0));
    TruncatedSeries s(ring, horizon);
    s.set_coeff(0, c0);
    for (int t = 1; t <= horizon; ++t) {
        std::int64_t acc = 0;
        for (int i = 1; i <= std::min(t, q.degree()); ++i) {
            acc = ring.add(acc, ring.mul(q.coeff(i), s.coeff(t - i)));
        }
        s.set_coeff(t, ring.neg(ring.mul(c0, acc)));
    }
    return s;
}

int ord_vector(std::span<const Poly> w) {
    int best = 0;
    for (const Poly& p : w) {
        for (int i = 0; i <= p.degree(); ++i) {
            best = std::max(best, p.ring().ord_value(p.coeff(i)));
        }
    }
    return best;
}

int vector_weight(std::span<const Poly> w) {
    int total = 0;
    for (const Poly& p : w) total += p.weight();
    return total;
}

namespace {

struct TermParser {
    std::string_view text;
    std::size_t pos = 0;
    const RingSpec& ring;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) {
        throw ParseError(msg, 1, at + 1);
    }

    std::int64_t parse_integer() {
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected a decimal integer", start);
        }
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = (v * 10 + (text[pos] - '0')) % ring.modulus();
            ++pos;
        }
        return neg ? -v : v;
    }

    int parse_exponent() {
        std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected an exponent", start);
        }
        std::int64_t e = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            e = e * 10 + (text[pos] - '0');
            if (e > 4096) fail("exponent too large", start);
            ++pos;
        }
        return static_cast<int>(e);
    }

    // term := int | int '*' d-part | d-part ; d-part := 'd' | 'd' '^' exp
    std::pair<std::int64_t, int> parse_term() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size()) fail("expected a term", start);
        std::int64_t c = 1;
        bool have_coeff = false;
        if (text[pos] == '-' || std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = parse_integer();
            have_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || text[pos] != 'd') fail("expected d after '*'", pos);
            } else {
                return {c, 0};
            }
        }
        if (pos >= text.size() || text[pos] != 'd') {
            fail(have_coeff ? "expected d" : "expected a coefficient or d", pos);
        }
        ++pos;
        skip_ws();
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            e = parse_exponent();
        }
        return {c, e};
    }

    Poly parse() {
        std::vector<std::int64_t> acc;
        while (true) {
            auto [c, e] = parse_term();
            if (static_cast<std::size_t>(e) >= acc.size()) acc.resize(static_cast<std::size_t>(e) + 1, 0);
            acc[static_cast<std::size_t>(e)] = ring.add(acc[static_cast<std::size_t>(e)], c);
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] != '+') fail("expected '+' between terms", pos);
            ++pos;
        }
        return Poly(ring, std::move(acc));
    }
};

}  // namespace

Poly parse_poly(std::string_view text, const RingSpec& ring) {
    TermParser parser{text, 0, ring};
    parser.skip_ws();
    if (parser.pos >= text.size()) throw ParseError("empty polynomial", 1, 1);
    return parser.parse();
}

namespace {

void append_term(std::string& out, std::int64_t c, int power) {
    if (!out.empty()) out += '+';
    if (power == 0) {
        out += std::to_string(c);
        return;
    }
    if (c != 1) {
        out += std::to_string(c);
        out += '*';
    }
    out += 'd';
    if (power > 1) {
        out += '^';
        out += std::to_string(power);
    }
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) != 0) append_term(out, p.coeff(i), i);
    }
    return out;
}

std::string to_string(const TruncatedSeries& s) {
    if (s.max_nonzero_index() < 0) return "0";
    std::string out;
    for (int i = 0; i <= s.horizon(); ++i) {
        if (s.coeff(i) != 0) append_term(out, s.coeff(i), i);
    }
    return out;
}

}  // namespace zpr
