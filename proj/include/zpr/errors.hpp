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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zpr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRing : Error {
    using Error::Error;
};
struct RingMismatch : Error {
    using Error::Error;
};
struct NotAUnit : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct SizeTooLarge : Error {
    using Error::Error;
};
struct BothZero : Error {
    using Error::Error;
};
struct ConstantTermNotUnit : Error {
    using Error::Error;
};
struct FieldRequired : Error {
    using Error::Error;
};
struct PrimeMismatch : Error {
    using Error::Error;
};
struct NotLeftZeroPrime : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct SearchTooLarge : Error {
    using Error::Error;
};
struct NotFullRowRank : Error {
    using Error::Error;
};
struct Catastrophic : Error {
    using Error::Error;
};
struct NotCatastrophic : Error {
    using Error::Error;
};
struct UnsupportedShape : Error {
    using Error::Error;
};
struct NonUnitConstantGcd : Error {
    using Error::Error;
};

/// Raised by the text parsers; positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg), line(line), col(col) {}
    std::size_t line;
    std::size_t col;
};

}  // namespace zpr
