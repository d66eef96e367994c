// Copyright 2026 The oneext Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oneext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. `line()` is 1-based, or 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on an argument was violated (bad vertex id, bad partition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The exact solver hit its search-node cap before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t nodes)
      : Error("search budget exceeded after " + std::to_string(nodes) + " nodes"), nodes_(nodes) {}

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t nodes_;
};

/// An internal consistency check failed (e.g. an oracle broke its size guarantee).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace oneext
