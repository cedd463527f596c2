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

#include "zpr/primeness.hpp"

#include <cstdint>

#include "zpr/linsolve.hpp"

namespace zpr {

namespace {

Poly minor_gcd(const PolyMatrix& projected, int k) {
    Poly g(projected.ring());
    for (const MinorTerm& m : full_size_minors(projected, k)) {
        if (m.value.is_zero()) continue;
        g = g.is_zero() ? m.value.scaled(projected.ring().inv_unit_value(m.value.leading_coeff()))
                        : gcd_over_field(g, m.value);
    }
    return g;
}

bool lzp_from_gcd(const SmithDecomposition& sm, const Poly& g, int k) {
    return sm.rank == k && g.degree() == 0;
}

}  // namespace

bool is_left_prime_field(const PolyMatrix& a) {
    if (!a.ring().is_field()) throw FieldRequired("is_left_prime_field expects Z_p");
    if (a.rows() > a.cols()) throw DimensionMismatch("left primeness requires k <= n");
    SmithDecomposition sm = smith_form(a);
    if (sm.rank < a.rows()) throw RankDeficient("matrix is not full row rank over Z_p(d)");
    Poly g = minor_gcd(a, a.rows());
    return g.degree() == 0;
}

bool is_lzp(const PolyMatrix& a) {
    if (a.rows() > a.cols()) throw DimensionMismatch("zero-primeness requires k <= n");
    if (!is_left_prime_field(project_p(a))) return false;
    std::optional<PolyMatrix> cert = right_inverse(a);
    if (!cert) throw std::logic_error("left prime projection without a lifted right inverse");
    return true;
}

namespace {

struct FactorCandidate {
    PolyMatrix factor;
    std::optional<PolyMatrix> cofactor;
};

// Decodes a lexicographic candidate index into a k x k factor with entry
// degrees <= bound. The first coefficient of the first entry is the most
// significant digit so candidate order matches tuple order.
PolyMatrix decode_factor(const RingSpec& ring, int k, int bound, std::int64_t index) {
    int per_entry = bound + 1;
    int digits = k * k * per_entry;
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(digits), 0);
    for (int i = digits - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = index % ring.modulus();
        index /= ring.modulus();
    }
    PolyMatrix delta(ring, k, k);
    int pos = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            std::vector<std::int64_t> coeffs(tuple.begin() + pos, tuple.begin() + pos + per_entry);
            delta.set(i, j, Poly(ring, std::move(coeffs)));
            pos += per_entry;
        }
    }
    return delta;
}

// Attempts the exact division A = delta * abar with deg(abar) <= deg(A) by
// solving for abar's coefficients.
std::optional<PolyMatrix> divide_exact(const PolyMatrix& a, const PolyMatrix& delta) {
    const RingSpec& ring = a.ring();
    int k = a.rows(), n = a.cols();
    int deg_a = std::max(a.max_degree(), 0);
    int deg_d = std::max(delta.max_degree(), 0);
    int unknown_per_poly = deg_a + 1;
    int unknowns = k * n * unknown_per_poly;
    int eq_degrees = deg_a + deg_d + 1;
    int equations = k * n * eq_degrees;

    std::vector<std::int64_t> mat(static_cast<std::size_t>(equations) * static_cast<std::size_t>(unknowns), 0);
    std::vector<std::int64_t> rhs(static_cast<std::size_t>(equations), 0);
    auto unknown_id = [&](int row, int col, int deg) {
        return (row * n + col) * unknown_per_poly + deg;
    };
    int eq = 0;
    for (int i = 0; i < k; ++i) {
        for (int c = 0; c < n; ++c) {
            for (int deg = 0; deg < eq_degrees; ++deg) {
                // coefficient of d^deg in sum_t delta(i,t) * abar(t,c)
                for (int t = 0; t < k; ++t) {
                    const Poly& dp = delta.at(i, t);
                    for (int e = 0; e <= std::min(dp.degree(), deg); ++e) {
                        int ad = deg - e;
                        if (ad > deg_a) continue;
                        auto idx = static_cast<std::size_t>(eq) * static_cast<std::size_t>(unknowns) +
                                   static_cast<std::size_t>(unknown_id(t, c, ad));
                        mat[idx] = ring.add(mat[idx], dp.coeff(e));
                    }
                }
                rhs[static_cast<std::size_t>(eq)] = a.at(i, c).coeff(deg);
                ++eq;
            }
        }
    }
    auto sol = solve_mod_pr(ring, equations, unknowns, std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;
    PolyMatrix abar(ring, k, n);
    for (int t = 0; t < k; ++t) {
        for (int c = 0; c < n; ++c) {
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(unknown_per_poly));
            for (int deg = 0; deg < unknown_per_poly; ++deg) {
                coeffs[static_cast<std::size_t>(deg)] =
                    (*sol)[static_cast<std::size_t>(unknown_id(t, c, deg))];
            }
            abar.set(t, c, Poly(ring, std::move(coeffs)));
        }
    }
    if (delta * abar != a) throw std::logic_error("factor division verification failed");
    return abar;
}

std::optional<FactorCandidate> try_candidate(const PolyMatrix& a, const RingSpec& ring, int k,
                                             int bound, std::int64_t index) {
    PolyMatrix delta = decode_factor(ring, k, bound, index);
    if (is_unimodular(delta)) return std::nullopt;
    std::optional<PolyMatrix> abar = divide_exact(a, delta);
    if (!abar) return std::nullopt;
    return FactorCandidate{std::move(delta), std::move(abar)};
}

}  // namespace

LfpVerdict lfp_enumerate(const PolyMatrix& a, int degree_bound, bool parallel) {
    const RingSpec& ring = a.ring();
    int k = a.rows();
    if (degree_bound < 0) throw SearchTooLarge("negative degree bound");

    double space = 1.0;
    std::int64_t total = 1;
    for (int i = 0; i < k * k * (degree_bound + 1); ++i) {
        space *= static_cast<double>(ring.modulus());
        if (space > 1e7) throw SearchTooLarge("left-factor search space exceeds 10^7");
        total *= ring.modulus();
    }

    std::int64_t found_index = -1;
    std::optional<FactorCandidate> found;

    constexpr std::int64_t kBlock = 8192;
    for (std::int64_t base = 0; base < total && found_index < 0; base += kBlock) {
        std::int64_t end = std::min(total, base + kBlock);
        std::int64_t local_best = -1;
        std::optional<FactorCandidate> local_found;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
        {
            std::int64_t mine = -1;
            std::optional<FactorCandidate> mine_found;
#pragma omp for schedule(static)
            for (std::int64_t idx = base; idx < end; ++idx) {
                if (mine >= 0) continue;
                auto cand = try_candidate(a, ring, k, degree_bound, idx);
                if (cand) {
                    mine = idx;
                    mine_found = std::move(cand);
                }
            }
#pragma omp critical
            {
                if (mine >= 0 && (local_best < 0 || mine < local_best)) {
                    local_best = mine;
                    local_found = std::move(mine_found);
                }
            }
        }
#else
        (void)parallel;
        for (std::int64_t idx = base; idx < end && local_best < 0; ++idx) {
            auto cand = try_candidate(a, ring, k, degree_bound, idx);
            if (cand) {
                local_best = idx;
                local_found = std::move(cand);
            }
        }
#endif
        if (local_best >= 0) {
            found_index = local_best;
            found = std::move(local_found);
        }
    }

    if (found) {
        return LfpVerdict{LfpOutcome::factor_found, degree_bound, std::move(found->factor),
                          std::move(found->cofactor)};
    }
    return LfpVerdict{LfpOutcome::no_factor_up_to_bound, degree_bound, std::nullopt, std::nullopt};
}

namespace {

LfpVerdict lfp_search_impl(const PolyMatrix& a, int degree_bound, bool parallel) {
    if (a.rows() > a.cols()) throw DimensionMismatch("left-factor search requires k <= n");
    PolyMatrix proj = project_p(a);
    SmithDecomposition sm = smith_form(proj);
    Poly g = minor_gcd(proj, a.rows());
    if (lzp_from_gcd(sm, g, a.rows())) {
        return LfpVerdict{LfpOutcome::implied_by_lzp, degree_bound, std::nullopt, std::nullopt};
    }
    return lfp_enumerate(a, degree_bound, parallel);
}

}  // namespace

LfpVerdict lfp_search(const PolyMatrix& a, int degree_bound) {
    return lfp_search_impl(a, degree_bound, true);
}

LfpVerdict lfp_search_serial(const PolyMatrix& a, int degree_bound) {
    return lfp_search_impl(a, degree_bound, false);
}

PrimenessReport analyze(const PolyMatrix& a, int degree_bound) {
    if (a.rows() > a.cols()) throw DimensionMismatch("analysis requires k <= n");
    PolyMatrix proj = project_p(a);
    SmithDecomposition sm = smith_form(proj);
    Poly g = minor_gcd(proj, a.rows());

    PrimenessReport report{false, std::nullopt, g,
                           LfpVerdict{LfpOutcome::no_factor_up_to_bound, degree_bound,
                                      std::nullopt, std::nullopt}};
    if (lzp_from_gcd(sm, g, a.rows())) {
        std::optional<PolyMatrix> cert = right_inverse(a);
        if (!cert) throw std::logic_error("zero-prime matrix without a right inverse");
        report.is_lzp = true;
        report.lzp_certificate = std::move(cert);
        report.lfp = LfpVerdict{LfpOutcome::implied_by_lzp, degree_bound, std::nullopt, std::nullopt};
        return report;
    }
    report.lfp = lfp_enumerate(a, degree_bound, true);
    return report;
}

}  // namespace zpr
