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

#include <iosfwd>
#include <string>

#include "polymat.hpp"

namespace zpr {

/// Plain-text matrix format:
///
///     ring <p> <r>
///     size <k> <n>
///     <entry 1,1>
///     ...
///     <entry k,n>
///
/// One polynomial per line, row-major. Blank lines and `#` comments are
/// skipped. Parsing either succeeds completely or throws ParseError with
/// 1-based line/column coordinates.
struct MatrixFile {
    RingSpec ring;
    PolyMatrix matrix;
};

MatrixFile parse_matrix_file(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

std::string format_matrix_file(const PolyMatrix& matrix);

/// FNV-1a digest of raw bytes, rendered as "fnv1a64:<hex>"; used to tie CLI
/// reports to their inputs.
std::string content_digest(const std::string& bytes);

}  // namespace zpr
