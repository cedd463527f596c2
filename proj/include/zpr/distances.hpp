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

#include "convcode.hpp"

namespace zpr {

enum class SlidingKind { generator, parity };

/// The truncated block-Toeplitz window of an encoder or parity check: block
/// (s, t) is the coefficient matrix of d^{t-s} (zero past the memory), giving
/// shape k(j+1) x n(j+1) for the generator and n(j+1) x (n-k)(j+1) for the
/// parity side.
class SlidingMatrix {
   public:
    SlidingMatrix(SlidingKind kind, int j, const RingSpec& ring, int block_rows, int block_cols,
                  std::vector<std::vector<std::int64_t>> blocks);

    SlidingKind kind() const noexcept { return kind_; }
    int j() const noexcept { return j_; }
    const RingSpec& ring() const noexcept { return ring_; }
    int block_rows() const noexcept { return block_rows_; }
    int block_cols() const noexcept { return block_cols_; }
    int rows() const noexcept { return block_rows_ * (j_ + 1); }
    int cols() const noexcept { return block_cols_ * (j_ + 1); }

    std::int64_t at(int r, int c) const;

    /// Coefficient blocks B_0 .. B_j, zero-padded past the memory.
    const std::vector<std::vector<std::int64_t>>& blocks() const noexcept { return blocks_; }

   private:
    SlidingKind kind_;
    int j_;
    RingSpec ring_;
    int block_rows_, block_cols_;
    std::vector<std::vector<std::int64_t>> blocks_;
};

/// Sliding window of the given kind; the parity kind requires a
/// noncatastrophic code.
SlidingMatrix sliding(const ConvCode& code, SlidingKind kind, int j);

/// (n-k)(j+1) + 1.
int column_distance_bound(const ConvCode& code, int j);

/// j-th column distance by exhaustive message enumeration over Z_{p^r} with
/// branch-and-bound pruning. Guard: (p^r)^{k(j+1)} <= 10^8.
int column_distance(const ConvCode& code, int j);
int column_distance_serial(const ConvCode& code, int j);

/// Same value from the parity side: lightest truncated word with nonzero
/// leading block in the truncated kernel. Guard: (p^r)^{n(j+1)} <= 10^8.
int column_distance_via_parity(const ConvCode& code, int j);
int column_distance_via_parity_serial(const ConvCode& code, int j);

struct FreeDistanceResult {
    int value;
    /// Set when the code is catastrophic and the value came from a bounded
    /// enumeration instead of the exact state-space search.
    bool lower_bound_only;
};

/// Free distance. Noncatastrophic codes are solved exactly on the projection
/// by a minimum-weight burst search over the encoder state space (guard:
/// p^{sum of row memories} <= 10^6); catastrophic codes fall back to a
/// bounded enumeration flagged as inexact.
FreeDistanceResult free_distance(const ConvCode& code);

/// The state-space route alone; requires a noncatastrophic code.
int free_distance_state_space(const ConvCode& code);

/// Minimum codeword weight over messages with entry degrees <= deg_bound,
/// enumerated over Z_{p^r}. Guard: (p^r)^{k(deg_bound+1)} <= 10^8.
int free_distance_bounded(const ConvCode& code, int deg_bound);
int free_distance_bounded_serial(const ConvCode& code, int deg_bound);

/// (n-k)(floor(delta/k)+1) + delta + 1 with delta the b-degree.
int singleton_bound(const ConvCode& code);

/// Whether the free distance meets the Singleton-type bound.
bool is_mds(const ConvCode& code);

/// floor(delta/k) + floor(delta/(n-k)); the last window index at which the
/// column distance can still meet its bound.
int L_index(const ConvCode& code);

/// Column distances meet their bounds for every j <= L.
bool is_mdp(const ConvCode& code);

/// Structural test for d_j^c meeting its bound: every full-size minor of the
/// projected sliding matrix taken from qualifying column (generator side) or
/// row (parity side) index sets is nonzero. Guard: at most 10^6 minors.
bool mdp_minor_criterion(const ConvCode& code, int j,
                         SlidingKind kind = SlidingKind::generator);

/// Embeds a field encoder into Z_{p^r} with digits kept verbatim and
/// validates the result.
ConvCode lift_code(const PolyMatrix& field_generator, const RingSpec& target);

struct ColumnDistanceEntry {
    int j;
    int distance;
    int bound;
    bool meets_bound;
};

struct DistanceProfile {
    FreeDistanceResult d_free;
    std::vector<ColumnDistanceEntry> column;
    int L;
    int singleton;
    bool mds;
    bool mdp;
};

/// Free distance, column distances for j = 0..max_j, and the optimality
/// verdicts in one report.
DistanceProfile distance_profile(const ConvCode& code, int max_j);

}  // namespace zpr
