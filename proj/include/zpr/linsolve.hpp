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
#include <optional>
#include <vector>

#include "ring.hpp"

namespace zpr {

/// Solves the linear system M x = b exactly over Z_{p^r}. M is rows x cols in
/// row-major order. The matrix is diagonalized with tracked row and column
/// operations, picking the entry of minimal p-valuation as pivot (ties by
/// smallest row, then column), so every divisibility test is exact and the
/// result does not depend on incidental choices.
///
/// Returns the canonical solution (free variables zero, pivot solutions at
/// the smallest nonnegative representative) or nullopt when no solution
/// exists.
std::optional<std::vector<std::int64_t>> solve_mod_pr(const RingSpec& ring, int rows, int cols,
                                                      std::vector<std::int64_t> m,
                                                      std::vector<std::int64_t> b);

}  // namespace zpr
