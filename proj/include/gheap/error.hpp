// Copyright 2026 The gheap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gheap {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A table entry is out of range or a structure is dimensionally broken.
struct MalformedTableError : Error {
  MalformedTableError(std::string msg, int row, int col)
      : Error(std::move(msg)), row(row), col(col) {}
  int row;
  int col;
};

/// Input text could not be parsed.
struct ParseError : Error {
  ParseError(std::string msg, int line, int col)
      : Error(std::move(msg)), line(line), col(col) {}
  int line;
  int col;
};

/// A semigroup turned out not to be an inverse semigroup.
struct NotInverseError : Error {
  NotInverseError(std::string msg, std::vector<int> witness)
      : Error(std::move(msg)), witness(std::move(witness)) {}
  std::vector<int> witness;
};

/// A construction exceeded a configured size cap.
struct SizeError : Error {
  using Error::Error;
};

/// Invalid combination of options (e.g. sampled checking without a seed).
struct ConfigError : Error {
  using Error::Error;
};

/// An internal consistency assertion failed. For valid inputs this cannot
/// happen; it guards against corrupt tables fed into a construction.
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace gheap
