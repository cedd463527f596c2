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
#include <vector>

#include "ring.hpp"

namespace zpr::detail {

/// Minimum weight of the truncated codeword [w_0 .. w_window] = [u_0 .. ] *
/// sliding(blocks) over message blocks u_t in Z_{p^r}^k with u_0 != 0 and
/// u_t = 0 for t > input_depth. blocks[e] is the k x n coefficient matrix of
/// d^e, zero-padded up to window. Depth-first with weight pruning; the
/// parallel variant splits the leading blocks across OpenMP threads and
/// reduces with a deterministic min.
int min_weight_image(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& blocks,
                     int k, int n, int window, int input_depth, bool parallel);

/// Minimum weight of [w_0 .. w_window], w_0 != 0, under the blockwise kernel
/// conditions sum_s w_s * H_{t-s} = 0 for t = 0..window. blocks[e] is the
/// n x q coefficient matrix of d^e in the parity check.
int min_weight_kernel(const RingSpec& ring, const std::vector<std::vector<std::int64_t>>& blocks,
                      int n, int q, int window, bool parallel);

}  // namespace zpr::detail
