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

#include "zpr/search.hpp"

#include <atomic>

namespace zpr::detail {

namespace {

void atomic_min(std::atomic<int>& target, int value) {
    int cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

std::int64_t pow_checked(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// Shared depth-first state for the image search. pre[t] accumulates the
// output block w_t from the message blocks pushed so far; pushing u_t adds
// u_t * blocks[e] into pre[t+e] and popping subtracts it again, so the
// accumulators are exactly zero between root-level candidates.
struct ImageSearch {
    const RingSpec& ring;
    const std::vector<std::vector<std::int64_t>>& blocks;
    int k, n, window, input_depth;
    std::int64_t m, u_card;
    std::atomic<int>& best;

    std::vector<std::int64_t> pre;
    std::vector<std::int64_t> digits;

    ImageSearch(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& blocks, int k,
                int n, int window, int input_depth, std::atomic<int>& best)
        : ring(ring),
          blocks(blocks),
          k(k),
          n(n),
          window(window),
          input_depth(input_depth),
          m(ring.modulus()),
          u_card(pow_checked(ring.modulus(), k)),
          best(best),
          pre(static_cast<std::size_t>(window + 1) * static_cast<std::size_t>(n), 0),
          digits(static_cast<std::size_t>(k), 0) {}

    void decode(std::int64_t idx) {
        for (int i = k - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = idx % m;
            idx /= m;
        }
    }

    void apply(int t, std::int64_t uidx, bool add) {
        decode(uidx);
        for (int e = 0; t + e <= window && e < static_cast<int>(blocks.size()); ++e) {
            const auto& blk = blocks[static_cast<std::size_t>(e)];
            auto* row = &pre[static_cast<std::size_t>(t + e) * static_cast<std::size_t>(n)];
            for (int c = 0; c < n; ++c) {
                std::int64_t acc = 0;
                for (int i = 0; i < k; ++i) {
                    acc = (acc + digits[static_cast<std::size_t>(i)] *
                                     blk[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                         static_cast<std::size_t>(c)]) %
                          m;
                }
                row[c] = add ? (row[c] + acc) % m : ((row[c] - acc) % m + m) % m;
            }
        }
    }

    int block_weight(int t) const {
        const auto* row = &pre[static_cast<std::size_t>(t) * static_cast<std::size_t>(n)];
        int w = 0;
        for (int c = 0; c < n; ++c) w += (row[c] != 0);
        return w;
    }

    void dfs(int t, int partial) {
        if (partial >= best.load(std::memory_order_relaxed)) return;
        if (t > input_depth) {
            int total = partial;
            for (int s = t; s <= window; ++s) {
                total += block_weight(s);
                if (total >= best.load(std::memory_order_relaxed)) return;
            }
            atomic_min(best, total);
            return;
        }
        std::int64_t start = (t == 0) ? 1 : 0;
        for (std::int64_t uidx = start; uidx < u_card; ++uidx) {
            apply(t, uidx, true);
            dfs(t + 1, partial + block_weight(t));
            apply(t, uidx, false);
        }
    }
};

// Kernel-side DFS: eq[t] accumulates the t-th block of w * sliding(H); a
// partial assignment survives only while every settled block is zero. The
// weight being minimized is that of the w digits themselves.
struct KernelSearch {
    const RingSpec& ring;
    const std::vector<std::vector<std::int64_t>>& blocks;
    int n, q, window;
    std::int64_t m, w_card;
    std::atomic<int>& best;

    std::vector<std::int64_t> eq;
    std::vector<std::int64_t> digits;

    KernelSearch(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& blocks, int n,
                 int q, int window, std::atomic<int>& best)
        : ring(ring),
          blocks(blocks),
          n(n),
          q(q),
          window(window),
          m(ring.modulus()),
          w_card(pow_checked(ring.modulus(), n)),
          best(best),
          eq(static_cast<std::size_t>(window + 1) * static_cast<std::size_t>(q), 0),
          digits(static_cast<std::size_t>(n), 0) {}

    int decode(std::int64_t idx) {
        int w = 0;
        for (int i = n - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = idx % m;
            w += (digits[static_cast<std::size_t>(i)] != 0);
            idx /= m;
        }
        return w;
    }

    void apply(int t, bool add) {
        for (int e = 0; t + e <= window && e < static_cast<int>(blocks.size()); ++e) {
            const auto& blk = blocks[static_cast<std::size_t>(e)];
            auto* row = &eq[static_cast<std::size_t>(t + e) * static_cast<std::size_t>(q)];
            for (int c = 0; c < q; ++c) {
                std::int64_t acc = 0;
                for (int i = 0; i < n; ++i) {
                    acc = (acc + digits[static_cast<std::size_t>(i)] *
                                     blk[static_cast<std::size_t>(i) * static_cast<std::size_t>(q) +
                                         static_cast<std::size_t>(c)]) %
                          m;
                }
                row[c] = add ? (row[c] + acc) % m : ((row[c] - acc) % m + m) % m;
            }
        }
    }

    bool settled_zero(int t) const {
        const auto* row = &eq[static_cast<std::size_t>(t) * static_cast<std::size_t>(q)];
        for (int c = 0; c < q; ++c) {
            if (row[c] != 0) return false;
        }
        return true;
    }

    void dfs(int t, int partial) {
        if (partial >= best.load(std::memory_order_relaxed)) return;
        if (t > window) {
            atomic_min(best, partial);
            return;
        }
        std::int64_t start = (t == 0) ? 1 : 0;
        for (std::int64_t widx = start; widx < w_card; ++widx) {
            int dw = decode(widx);
            if (partial + dw >= best.load(std::memory_order_relaxed)) continue;
            apply(t, true);
            if (settled_zero(t)) dfs(t + 1, partial + dw);
            decode(widx);
            apply(t, false);
        }
    }
};

}  // namespace

int min_weight_image(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& blocks,
                     int k, int n, int window, int input_depth, bool parallel) {
    const int inf = (window + 1) * n + 1;
    std::atomic<int> best{inf};
    std::int64_t u_card = pow_checked(ring.modulus(), k);
#ifdef _OPENMP
    if (parallel && input_depth >= 1) {
        std::int64_t iters = (u_card - 1) * u_card;
#pragma omp parallel
        {
            ImageSearch search(ring, blocks, k, n, window, input_depth, best);
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t it = 0; it < iters; ++it) {
                std::int64_t u0 = 1 + it / u_card;
                std::int64_t u1 = it % u_card;
                search.apply(0, u0, true);
                int w0 = search.block_weight(0);
                search.apply(1, u1, true);
                search.dfs(2, w0 + search.block_weight(1));
                search.apply(1, u1, false);
                search.apply(0, u0, false);
            }
        }
        return best.load();
    }
    if (parallel) {
#pragma omp parallel
        {
            ImageSearch search(ring, blocks, k, n, window, input_depth, best);
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t u0 = 1; u0 < u_card; ++u0) {
                search.apply(0, u0, true);
                search.dfs(1, search.block_weight(0));
                search.apply(0, u0, false);
            }
        }
        return best.load();
    }
#else
    (void)parallel;
    (void)u_card;
#endif
    ImageSearch search(ring, blocks, k, n, window, input_depth, best);
    search.dfs(0, 0);
    return best.load();
}

int min_weight_kernel(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& blocks,
                      int n, int q, int window, bool parallel) {
    const int inf = (window + 1) * n + 1;
    std::atomic<int> best{inf};
    std::int64_t w_card = pow_checked(ring.modulus(), n);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel
        {
            KernelSearch search(ring, blocks, n, q, window, best);
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t w0 = 1; w0 < w_card; ++w0) {
                int dw = search.decode(w0);
                search.apply(0, true);
                if (search.settled_zero(0)) search.dfs(1, dw);
                search.decode(w0);
                search.apply(0, false);
            }
        }
        return best.load();
    }
#else
    (void)parallel;
    (void)w_card;
#endif
    KernelSearch search(ring, blocks, n, q, window, best);
    search.dfs(0, 0);
    return best.load();
}

}  // namespace zpr::detail
