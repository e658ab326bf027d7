// Copyright 2026 The cssmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSSMAP_ERROR_H
#define CSSMAP_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cssmap {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes or arguments do not fit the operation.
struct DimensionError : Error {
    using Error::Error;
};

/// An exhaustive enumeration would exceed its hard cap.
struct TooLarge : Error {
    using Error::Error;
};

/// Hx * Hz^T has a nonzero entry.
struct CommutationViolation : Error {
    size_t row_x;
    size_t row_z;
    CommutationViolation(size_t row_x, size_t row_z)
        : Error("X check row " + std::to_string(row_x) + " anticommutes with Z check row " + std::to_string(row_z)),
          row_x(row_x),
          row_z(row_z) {
    }
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
struct ParseError : Error {
    size_t line;
    ParseError(size_t line, const std::string &msg)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {
    }
};

/// An internal consistency check failed.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace cssmap

#endif
