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

#include "zpr/distances.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "zpr/search.hpp"

namespace zpr {

namespace {

// Coefficient matrices B_0 .. B_{count-1} of a polynomial matrix, zero-padded.
std::vector<std::vector<std::int64_t>> coefficient_blocks(const PolyMatrix& m, int count) {
    std::vector<std::vector<std::int64_t>> blocks(
        static_cast<std::size_t>(count),
        std::vector<std::int64_t>(static_cast<std::size_t>(m.rows()) *
                                      static_cast<std::size_t>(m.cols()),
                                  0));
    for (int e = 0; e < count; ++e) {
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                blocks[static_cast<std::size_t>(e)][static_cast<std::size_t>(i) *
                                                        static_cast<std::size_t>(m.cols()) +
                                                    static_cast<std::size_t>(j)] =
                    m.at(i, j).coeff(e);
            }
        }
    }
    return blocks;
}

void check_enumeration_guard(const RingSpec& ring, int digits, double limit, const char* what) {
    double space = 1.0;
    for (int i = 0; i < digits; ++i) {
        space *= static_cast<double>(ring.modulus());
        if (space > limit) throw SearchTooLarge(what);
    }
}

}  // namespace

SlidingMatrix::SlidingMatrix(SlidingKind kind, int j, const RingSpec& ring, int block_rows,
                             int block_cols, std::vector<std::vector<std::int64_t>> blocks)
    : kind_(kind),
      j_(j),
      ring_(ring),
      block_rows_(block_rows),
      block_cols_(block_cols),
      blocks_(std::move(blocks)) {}

std::int64_t SlidingMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows() || c < 0 || c >= cols()) {
        throw DimensionMismatch("sliding matrix index out of range");
    }
    int s = r / block_rows_;
    int t = c / block_cols_;
    if (t < s) return 0;
    const auto& blk = blocks_[static_cast<std::size_t>(t - s)];
    return blk[static_cast<std::size_t>(r % block_rows_) * static_cast<std::size_t>(block_cols_) +
               static_cast<std::size_t>(c % block_cols_)];
}

SlidingMatrix sliding(const ConvCode& code, SlidingKind kind, int j) {
    if (j < 0) throw DimensionMismatch("window index must be >= 0");
    if (kind == SlidingKind::generator) {
        return SlidingMatrix(kind, j, code.ring(), code.k(), code.n(),
                             coefficient_blocks(code.generator(), j + 1));
    }
    const PolyMatrix& h = code.parity_check();
    return SlidingMatrix(kind, j, code.ring(), code.n(), code.n() - code.k(),
                         coefficient_blocks(h, j + 1));
}

int column_distance_bound(const ConvCode& code, int j) {
    return (code.n() - code.k()) * (j + 1) + 1;
}

namespace {

int column_distance_impl(const ConvCode& code, int j, bool parallel) {
    if (!code.noncatastrophic()) {
        throw Catastrophic("column distances are defined for noncatastrophic codes");
    }
    if (j < 0) throw DimensionMismatch("window index must be >= 0");
    check_enumeration_guard(code.ring(), code.k() * (j + 1), 1e8,
                            "column distance enumeration exceeds 10^8");
    auto blocks = coefficient_blocks(code.generator(), j + 1);
    return detail::min_weight_image(code.ring(), blocks, code.k(), code.n(), j, j, parallel);
}

int column_distance_parity_impl(const ConvCode& code, int j, bool parallel) {
    if (j < 0) throw DimensionMismatch("window index must be >= 0");
    const PolyMatrix& h = code.parity_check();
    check_enumeration_guard(code.ring(), code.n() * (j + 1), 1e8,
                            "kernel enumeration exceeds 10^8");
    auto blocks = coefficient_blocks(h, j + 1);
    return detail::min_weight_kernel(code.ring(), blocks, code.n(), code.n() - code.k(), j,
                                     parallel);
}

}  // namespace

int column_distance(const ConvCode& code, int j) { return column_distance_impl(code, j, true); }
int column_distance_serial(const ConvCode& code, int j) {
    return column_distance_impl(code, j, false);
}
int column_distance_via_parity(const ConvCode& code, int j) {
    return column_distance_parity_impl(code, j, true);
}
int column_distance_via_parity_serial(const ConvCode& code, int j) {
    return column_distance_parity_impl(code, j, false);
}

int free_distance_state_space(const ConvCode& code) {
    if (!code.noncatastrophic()) {
        throw Catastrophic("state-space search requires a noncatastrophic code");
    }
    PolyMatrix gp = project_p(code.generator());
    const RingSpec field = gp.ring();
    const std::int64_t p = field.p();
    const int k = code.k(), n = code.n();

    std::vector<int> memory(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        for (int c = 0; c < n; ++c) {
            memory[static_cast<std::size_t>(i)] =
                std::max(memory[static_cast<std::size_t>(i)], gp.at(i, c).degree());
        }
    }
    int total_digits = 0;
    for (int i = 0; i < k; ++i) total_digits += memory[static_cast<std::size_t>(i)];
    double states_d = 1.0;
    for (int i = 0; i < total_digits; ++i) {
        states_d *= static_cast<double>(p);
        if (states_d > 1e6) throw SearchTooLarge("state space exceeds 10^6");
    }
    std::int64_t states = 1;
    for (int i = 0; i < total_digits; ++i) states *= p;
    std::int64_t inputs = 1;
    for (int i = 0; i < k; ++i) inputs *= p;

    // state digits: for each row, its past inputs most-recent first
    std::vector<std::int64_t> reg(static_cast<std::size_t>(total_digits), 0);
    std::vector<std::int64_t> a(static_cast<std::size_t>(k), 0);
    std::vector<int> offset(static_cast<std::size_t>(k), 0);
    {
        int off = 0;
        for (int i = 0; i < k; ++i) {
            offset[static_cast<std::size_t>(i)] = off;
            off += memory[static_cast<std::size_t>(i)];
        }
    }

    auto decode_state = [&](std::int64_t s) {
        for (int i = total_digits - 1; i >= 0; --i) {
            reg[static_cast<std::size_t>(i)] = s % p;
            s /= p;
        }
    };
    auto decode_input = [&](std::int64_t v) {
        for (int i = k - 1; i >= 0; --i) {
            a[static_cast<std::size_t>(i)] = v % p;
            v /= p;
        }
    };
    // output weight and next state for the currently decoded (reg, a)
    auto step = [&](std::int64_t& next_state) {
        int weight = 0;
        for (int c = 0; c < n; ++c) {
            std::int64_t acc = 0;
            for (int i = 0; i < k; ++i) {
                const Poly& e = gp.at(i, c);
                acc += e.coeff(0) * a[static_cast<std::size_t>(i)];
                for (int age = 1; age <= memory[static_cast<std::size_t>(i)]; ++age) {
                    acc += e.coeff(age) *
                           reg[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + age - 1)];
                }
            }
            weight += (acc % p != 0);
        }
        next_state = 0;
        for (int i = 0; i < k; ++i) {
            int mem = memory[static_cast<std::size_t>(i)];
            for (int age = 1; age <= mem; ++age) {
                std::int64_t digit = (age == 1)
                                         ? a[static_cast<std::size_t>(i)]
                                         : reg[static_cast<std::size_t>(
                                               offset[static_cast<std::size_t>(i)] + age - 2)];
                next_state = next_state * p + digit;
            }
        }
        return weight;
    };

    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(states), inf);
    using Item = std::pair<int, std::int64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    int best = inf;

    decode_state(0);
    for (std::int64_t v = 1; v < inputs; ++v) {
        decode_input(v);
        std::int64_t next;
        int w = step(next);
        if (next == 0) {
            best = std::min(best, w);
        } else if (w < dist[static_cast<std::size_t>(next)]) {
            dist[static_cast<std::size_t>(next)] = w;
            queue.emplace(w, next);
        }
    }
    while (!queue.empty()) {
        auto [d, s] = queue.top();
        queue.pop();
        if (d > dist[static_cast<std::size_t>(s)] || d >= best) continue;
        for (std::int64_t v = 0; v < inputs; ++v) {
            decode_state(s);
            decode_input(v);
            std::int64_t next;
            int w = step(next);
            int nd = d + w;
            if (next == 0) {
                best = std::min(best, nd);
            } else if (nd < dist[static_cast<std::size_t>(next)]) {
                dist[static_cast<std::size_t>(next)] = nd;
                queue.emplace(nd, next);
            }
        }
    }
    return best;
}

namespace {

int free_distance_bounded_impl(const ConvCode& code, int deg_bound, bool parallel) {
    if (deg_bound < 0) throw DimensionMismatch("degree bound must be >= 0");
    check_enumeration_guard(code.ring(), code.k() * (deg_bound + 1), 1e8,
                            "bounded codeword enumeration exceeds 10^8");
    int window = deg_bound + std::max(code.generator().max_degree(), 0);
    auto blocks = coefficient_blocks(code.generator(), window + 1);
    return detail::min_weight_image(code.ring(), blocks, code.k(), code.n(), window, deg_bound,
                                    parallel);
}

}  // namespace

int free_distance_bounded(const ConvCode& code, int deg_bound) {
    return free_distance_bounded_impl(code, deg_bound, true);
}
int free_distance_bounded_serial(const ConvCode& code, int deg_bound) {
    return free_distance_bounded_impl(code, deg_bound, false);
}

FreeDistanceResult free_distance(const ConvCode& code) {
    if (code.noncatastrophic()) {
        return FreeDistanceResult{free_distance_state_space(code), false};
    }
    return FreeDistanceResult{free_distance_bounded(code, 4), true};
}

int singleton_bound(const ConvCode& code) {
    int delta = code.b_degree();
    return (code.n() - code.k()) * (delta / code.k() + 1) + delta + 1;
}

bool is_mds(const ConvCode& code) { return free_distance(code).value == singleton_bound(code); }

int L_index(const ConvCode& code) {
    if (code.k() == code.n()) throw DimensionMismatch("rate n/n codes have no column profile");
    int delta = code.b_degree();
    return delta / code.k() + delta / (code.n() - code.k());
}

bool is_mdp(const ConvCode& code) {
    int limit = L_index(code);
    for (int j = 0; j <= limit; ++j) {
        if (column_distance(code, j) != column_distance_bound(code, j)) return false;
    }
    return true;
}

namespace {

// Rank test mod p via Gaussian elimination; used on scalar minors of the
// projected sliding matrices.
bool nonsingular_mod_p(std::vector<std::int64_t> m, int size, std::int64_t p) {
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int row = col; row < size; ++row) {
            if (m[static_cast<std::size_t>(row) * static_cast<std::size_t>(size) +
                  static_cast<std::size_t>(col)] %
                    p !=
                0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int j = 0; j < size; ++j) {
                std::swap(m[static_cast<std::size_t>(pivot) * static_cast<std::size_t>(size) +
                            static_cast<std::size_t>(j)],
                          m[static_cast<std::size_t>(col) * static_cast<std::size_t>(size) +
                            static_cast<std::size_t>(j)]);
            }
        }
        std::int64_t pv = m[static_cast<std::size_t>(col) * static_cast<std::size_t>(size) +
                            static_cast<std::size_t>(col)] %
                          p;
        // inverse mod p by Fermat
        std::int64_t inv = 1, base = (pv % p + p) % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int row = col + 1; row < size; ++row) {
            std::int64_t factor =
                m[static_cast<std::size_t>(row) * static_cast<std::size_t>(size) +
                  static_cast<std::size_t>(col)] %
                p * inv % p;
            if (factor == 0) continue;
            for (int j = col; j < size; ++j) {
                auto idx = static_cast<std::size_t>(row) * static_cast<std::size_t>(size) +
                           static_cast<std::size_t>(j);
                auto src = static_cast<std::size_t>(col) * static_cast<std::size_t>(size) +
                           static_cast<std::size_t>(j);
                m[idx] = ((m[idx] - factor * m[src]) % p + p) % p;
            }
        }
    }
    return true;
}

// Enumerates ascending index sets of the given size with per-position lower
// bounds (generator side) or upper bounds (parity side), testing each minor.
struct MinorScan {
    const SlidingMatrix& sm;
    bool select_rows;  // parity side selects rows, generator side columns
    int size;
    int universe;
    std::vector<int> min_at;  // inclusive per-position lower bound
    std::vector<int> max_at;  // inclusive per-position upper bound
    std::int64_t budget = 1000000;
    std::vector<int> chosen;
    std::int64_t p;

    bool all_nonsingular(int pos, int low) {
        if (pos == size) {
            if (--budget < 0) throw SearchTooLarge("minor enumeration exceeds 10^6");
            std::vector<std::int64_t> sub(static_cast<std::size_t>(size) *
                                          static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) {
                for (int j = 0; j < size; ++j) {
                    int r = select_rows ? chosen[static_cast<std::size_t>(i)] : i;
                    int c = select_rows ? j : chosen[static_cast<std::size_t>(j)];
                    sub[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                        static_cast<std::size_t>(j)] = sm.at(r, c);
                }
            }
            return nonsingular_mod_p(std::move(sub), size, p);
        }
        int lo = std::max(low, min_at[static_cast<std::size_t>(pos)]);
        int hi = std::min(universe - (size - pos), max_at[static_cast<std::size_t>(pos)]);
        for (int v = lo; v <= hi; ++v) {
            chosen[static_cast<std::size_t>(pos)] = v;
            if (!all_nonsingular(pos + 1, v + 1)) return false;
        }
        return true;
    }
};

}  // namespace

bool mdp_minor_criterion(const ConvCode& code, int j, SlidingKind kind) {
    if (!code.noncatastrophic()) {
        throw Catastrophic("minor criterion requires a noncatastrophic code");
    }
    if (j < 0) throw DimensionMismatch("window index must be >= 0");
    const int n = code.n(), k = code.k(), q = n - k;
    if (kind == SlidingKind::generator) {
        PolyMatrix gp = project_p(code.generator());
        SlidingMatrix sm(SlidingKind::generator, j, gp.ring(), k, n,
                         coefficient_blocks(gp, j + 1));
        int size = k * (j + 1);
        MinorScan scan{sm,
                       false,
                       size,
                       n * (j + 1),
                       std::vector<int>(static_cast<std::size_t>(size), 0),
                       std::vector<int>(static_cast<std::size_t>(size), n * (j + 1) - 1),
                       1000000,
                       std::vector<int>(static_cast<std::size_t>(size), 0),
                       gp.ring().p()};
        for (int s = 1; s <= j; ++s) scan.min_at[static_cast<std::size_t>(s * k)] = s * n;
        return scan.all_nonsingular(0, 0);
    }
    PolyMatrix hp = project_p(code.parity_check());
    SlidingMatrix sm(SlidingKind::parity, j, hp.ring(), n, q, coefficient_blocks(hp, j + 1));
    int size = q * (j + 1);
    MinorScan scan{sm,
                   true,
                   size,
                   n * (j + 1),
                   std::vector<int>(static_cast<std::size_t>(size), 0),
                   std::vector<int>(static_cast<std::size_t>(size), n * (j + 1) - 1),
                   1000000,
                   std::vector<int>(static_cast<std::size_t>(size), 0),
                   hp.ring().p()};
    for (int s = 1; s <= j; ++s) scan.max_at[static_cast<std::size_t>(s * q - 1)] = s * n - 1;
    return scan.all_nonsingular(0, 0);
}

ConvCode lift_code(const PolyMatrix& field_generator, const RingSpec& target) {
    if (!field_generator.ring().is_field()) {
        throw FieldRequired("lift source must live over Z_p");
    }
    if (field_generator.ring().p() != target.p()) {
        throw PrimeMismatch("lift target must share the source prime");
    }
    return ConvCode(lift_digits(field_generator, target));
}

DistanceProfile distance_profile(const ConvCode& code, int max_j) {
    DistanceProfile profile{free_distance(code), {}, L_index(code), singleton_bound(code), false,
                            false};
    profile.mds = profile.d_free.value == profile.singleton;
    for (int j = 0; j <= max_j; ++j) {
        int d = column_distance(code, j);
        int bound = column_distance_bound(code, j);
        profile.column.push_back({j, d, bound, d == bound});
    }
    bool mdp = true;
    for (int j = 0; j <= profile.L; ++j) {
        int d = (j <= max_j) ? profile.column[static_cast<std::size_t>(j)].distance
                             : column_distance(code, j);
        if (d != column_distance_bound(code, j)) {
            mdp = false;
            break;
        }
    }
    profile.mdp = mdp;
    return profile;
}

}  // namespace zpr
