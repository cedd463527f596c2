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

#include "zpr/linsolve.hpp"

#include <algorithm>

namespace zpr {

std::optional<std::vector<std::int64_t>> solve_mod_pr(const RingSpec& ring, int rows, int cols,
                                                      std::vector<std::int64_t> m,
                                                      std::vector<std::int64_t> b) {
    if (static_cast<int>(m.size()) != rows * cols || static_cast<int>(b.size()) != rows) {
        throw DimensionMismatch("linear system shape mismatch");
    }
    for (auto& v : m) v = ring.reduce(v);
    for (auto& v : b) v = ring.reduce(v);

    auto at = [&](int i, int j) -> std::int64_t& {
        return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(j)];
    };

    // Column permutation/combination tracking: x = F z, F starts as identity.
    std::vector<std::int64_t> f(static_cast<std::size_t>(cols) * static_cast<std::size_t>(cols), 0);
    auto fat = [&](int i, int j) -> std::int64_t& {
        return f[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < cols; ++i) fat(i, i) = 1;

    const int r = ring.r();
    std::vector<int> pivot_val;
    int t = 0;
    int steps = std::min(rows, cols);
    while (t < steps) {
        int best_i = -1, best_j = -1, best_v = r;
        for (int i = t; i < rows; ++i) {
            for (int j = t; j < cols; ++j) {
                if (at(i, j) == 0) continue;
                int v = ring.valuation(at(i, j));
                if (v < best_v) {
                    best_v = v;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < 0) break;
        if (best_i != t) {
            for (int j = 0; j < cols; ++j) std::swap(at(t, j), at(best_i, j));
            std::swap(b[static_cast<std::size_t>(t)], b[static_cast<std::size_t>(best_i)]);
        }
        if (best_j != t) {
            for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, best_j));
            for (int i = 0; i < cols; ++i) std::swap(fat(i, t), fat(i, best_j));
        }

        std::int64_t piv = at(t, t);
        std::int64_t pv = 1;
        for (int v = 0; v < best_v; ++v) pv *= ring.p();
        std::int64_t unit_inv = ring.inv_unit_value(piv / pv);

        // The pivot has minimal valuation, so every remaining entry in its row
        // and column is an exact multiple of it.
        for (int i = t + 1; i < rows; ++i) {
            if (at(i, t) == 0) continue;
            std::int64_t factor = ring.mul(at(i, t) / pv, unit_inv);
            for (int j = t; j < cols; ++j) at(i, j) = ring.sub(at(i, j), ring.mul(factor, at(t, j)));
            b[static_cast<std::size_t>(i)] =
                ring.sub(b[static_cast<std::size_t>(i)], ring.mul(factor, b[static_cast<std::size_t>(t)]));
        }
        for (int j = t + 1; j < cols; ++j) {
            if (at(t, j) == 0) continue;
            std::int64_t factor = ring.mul(at(t, j) / pv, unit_inv);
            for (int i = t; i < rows; ++i) at(i, j) = ring.sub(at(i, j), ring.mul(factor, at(i, t)));
            for (int i = 0; i < cols; ++i) fat(i, j) = ring.sub(fat(i, j), ring.mul(factor, fat(i, t)));
        }
        pivot_val.push_back(best_v);
        ++t;
    }

    // Diagonal system: each pivot equation is independent.
    std::vector<std::int64_t> z(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < static_cast<int>(pivot_val.size()); ++i) {
        int v = pivot_val[static_cast<std::size_t>(i)];
        std::int64_t pv = 1;
        for (int e = 0; e < v; ++e) pv *= ring.p();
        std::int64_t rhs = b[static_cast<std::size_t>(i)];
        if (rhs % pv != 0) return std::nullopt;
        std::int64_t unit_inv = ring.inv_unit_value(at(i, i) / pv);
        std::int64_t sol = ring.mul(rhs / pv, unit_inv) % (ring.modulus() / pv);
        z[static_cast<std::size_t>(i)] = sol;
    }
    for (int i = static_cast<int>(pivot_val.size()); i < rows; ++i) {
        if (b[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    }

    std::vector<std::int64_t> x(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < cols; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < cols; ++j) acc = ring.add(acc, ring.mul(fat(i, j), z[static_cast<std::size_t>(j)]));
        x[static_cast<std::size_t>(i)] = acc;
    }
    return x;
}

}  // namespace zpr
