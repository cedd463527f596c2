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

#include "zpr/convcode.hpp"

#include <cassert>

#include "zpr/linsolve.hpp"

namespace zpr {

ConvCode::ConvCode(PolyMatrix generator) : g_(std::move(generator)) {
    if (g_.rows() > g_.cols()) throw DimensionMismatch("encoder requires k <= n");
    PolyMatrix proj = project_p(g_);
    SmithDecomposition sm = smith_form(proj);
    if (sm.rank < g_.rows()) {
        throw NotFullRowRank("generator projection loses row rank over Z_p(d)");
    }
    // b-degree: largest degree among the full-size minors of the projection.
    for (const MinorTerm& m : full_size_minors(proj, g_.rows())) {
        if (!m.value.is_zero()) b_degree_ = std::max(b_degree_, m.value.degree());
    }
    bool projection_prime = true;
    for (int i = 0; i < g_.rows(); ++i) {
        if (sm.S.at(i, i).degree() != 0) projection_prime = false;
    }
    noncatastrophic_ = projection_prime;
    if (noncatastrophic_) {
        IdentityZeroReduction red = reduce_to_identity_zero(g_);
        // G * col_transform = [inv(row_transform) 0], so the trailing columns
        // of col_transform are annihilated by G.
        if (n() > k()) {
            PolyMatrix h(ring(), n(), n() - k());
            for (int i = 0; i < n(); ++i) {
                for (int j = 0; j < n() - k(); ++j) {
                    h.set(i, j, red.col_transform.at(i, k() + j));
                }
            }
            parity_ = std::move(h);
        }
        // u = w * X recovers the message of a codeword: X = col_transform
        // restricted to its leading block times row_transform.
        PolyMatrix stacked(ring(), n(), k());
        for (int i = 0; i < k(); ++i) {
            for (int j = 0; j < k(); ++j) stacked.set(i, j, red.row_transform.at(i, j));
        }
        PolyMatrix x = red.col_transform * stacked;
        PolyMatrix eye = PolyMatrix::identity(ring(), k());
        if (g_ * x != eye) throw std::logic_error("generator right inverse verification failed");
        right_inverse_ = std::move(x);
        if (parity_) {
            PolyMatrix zero(ring(), k(), n() - k());
            if (g_ * *parity_ != zero) throw std::logic_error("parity check verification failed");
            SmithDecomposition hs = smith_form(project_p(*parity_));
            if (hs.rank != n() - k()) throw std::logic_error("parity check loses column rank");
        }
    }
}

const PolyMatrix& ConvCode::parity_check() const {
    if (!noncatastrophic_) {
        throw Catastrophic("catastrophic code: no kernel representation exists");
    }
    if (!parity_) {
        throw UnsupportedShape("rate n/n code has an empty parity check");
    }
    return *parity_;
}

const PolyMatrix& ConvCode::generator_right_inverse() const {
    if (!right_inverse_) {
        throw Catastrophic("catastrophic code: generator has no polynomial right inverse");
    }
    return *right_inverse_;
}

Codeword encode(const ConvCode& code, std::span<const Poly> u) {
    if (static_cast<int>(u.size()) != code.k()) {
        throw DimensionMismatch("message length does not match encoder rank");
    }
    std::vector<Poly> w;
    w.reserve(static_cast<std::size_t>(code.n()));
    for (int c = 0; c < code.n(); ++c) {
        Poly acc(code.ring());
        for (int i = 0; i < code.k(); ++i) acc = acc + u[static_cast<std::size_t>(i)] * code.generator().at(i, c);
        w.push_back(std::move(acc));
    }
    assert(ord_vector(w) == ord_vector(u));
    return Codeword{std::move(w), std::vector<Poly>(u.begin(), u.end())};
}

std::optional<std::vector<Poly>> row_module_combination(const PolyMatrix& g,
                                                        std::span<const Poly> target) {
    if (static_cast<int>(target.size()) != g.cols()) {
        throw DimensionMismatch("target length does not match row module width");
    }
    const RingSpec& ring = g.ring();
    for (const Poly& t : target) ring.check_same(t.ring());
    int k = g.rows(), n = g.cols();
    int target_deg = 0;
    for (const Poly& t : target) target_deg = std::max(target_deg, t.degree());
    int bound = target_deg + k * std::max(g.max_degree(), 0);
    int unknown_per_poly = bound + 1;
    int unknowns = k * unknown_per_poly;
    int eq_degrees = bound + std::max(g.max_degree(), 0) + 1;
    int equations = n * eq_degrees;

    std::vector<std::int64_t> mat(static_cast<std::size_t>(equations) * static_cast<std::size_t>(unknowns), 0);
    std::vector<std::int64_t> rhs(static_cast<std::size_t>(equations), 0);
    int eq = 0;
    for (int c = 0; c < n; ++c) {
        for (int deg = 0; deg < eq_degrees; ++deg) {
            for (int i = 0; i < k; ++i) {
                const Poly& gp = g.at(i, c);
                for (int e = 0; e <= std::min(gp.degree(), deg); ++e) {
                    int xd = deg - e;
                    if (xd > bound) continue;
                    auto idx = static_cast<std::size_t>(eq) * static_cast<std::size_t>(unknowns) +
                               static_cast<std::size_t>(i * unknown_per_poly + xd);
                    mat[idx] = ring.add(mat[idx], gp.coeff(e));
                }
            }
            rhs[static_cast<std::size_t>(eq)] = target[static_cast<std::size_t>(c)].coeff(deg);
            ++eq;
        }
    }
    auto sol = solve_mod_pr(ring, equations, unknowns, std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<Poly> x;
    x.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<std::int64_t> coeffs(sol->begin() + i * unknown_per_poly,
                                         sol->begin() + (i + 1) * unknown_per_poly);
        x.emplace_back(ring, std::move(coeffs));
    }
    return x;
}

bool equivalent(const ConvCode& a, const ConvCode& b) {
    a.ring().check_same(b.ring());
    if (a.k() != b.k() || a.n() != b.n()) {
        throw DimensionMismatch("equivalence requires matching rate");
    }
    PolyMatrix u(a.ring(), a.k(), a.k());
    for (int i = 0; i < b.k(); ++i) {
        auto combo = row_module_combination(a.generator(), b.generator().row(i));
        if (!combo) return false;
        for (int j = 0; j < a.k(); ++j) u.set(i, j, (*combo)[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < a.k(); ++i) {
        if (!row_module_combination(b.generator(), a.generator().row(i))) return false;
    }
    if (u * a.generator() != b.generator() || !is_unimodular(u)) {
        throw std::logic_error("mutual row containment without a unimodular transform");
    }
    return true;
}

bool kernel_membership(const ConvCode& code, std::span<const Poly> w) {
    if (static_cast<int>(w.size()) != code.n()) {
        throw DimensionMismatch("word length does not match code length");
    }
    const PolyMatrix& h = code.parity_check();
    for (int j = 0; j < h.cols(); ++j) {
        Poly acc(code.ring());
        for (int i = 0; i < code.n(); ++i) acc = acc + w[static_cast<std::size_t>(i)] * h.at(i, j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

CatastrophicDemo catastrophic_demo(const ConvCode& code, int horizon) {
    if (code.noncatastrophic()) throw NotCatastrophic("encoder is noncatastrophic");
    if (code.k() != 1) throw UnsupportedShape("demo supports rate 1/n encoders only");
    const RingSpec& ring = code.ring();
    PolyMatrix proj = project_p(code.generator());
    Poly g(proj.ring());
    for (int c = 0; c < code.n(); ++c) {
        const Poly& e = proj.at(0, c);
        if (e.is_zero()) continue;
        g = g.is_zero() ? e.scaled(proj.ring().inv_unit_value(e.leading_coeff()))
                        : gcd_over_field(g, e);
    }
    if (g.is_zero() || g.coeff(0) == 0) {
        throw NonUnitConstantGcd("projection gcd lacks a unit constant term");
    }
    std::int64_t scale = 1;
    for (int i = 0; i < ring.r() - 1; ++i) scale *= ring.p();
    TruncatedSeries input = series_inverse(lift_digits(g, ring), horizon).scaled(scale);
    std::vector<TruncatedSeries> output;
    output.reserve(static_cast<std::size_t>(code.n()));
    int out_weight = 0;
    int out_deg = -1;
    for (int c = 0; c < code.n(); ++c) {
        TruncatedSeries entry = input * code.generator().at(0, c);
        out_weight += entry.weight();
        out_deg = std::max(out_deg, entry.max_nonzero_index());
        output.push_back(std::move(entry));
    }
    return CatastrophicDemo{g,       input, std::move(output), input.weight(),
                            out_weight, out_deg};
}

}  // namespace zpr
