// Copyright 2026 The fflab Authors
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

#ifndef FFLAB_ERROR_HPP_
#define FFLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fflab {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violation: out-of-range node, bad family size, invalid
// gadget parameters, malformed strategy, invalid path decomposition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line` is 1-based; `offset` is the 0-based byte
// offset inside that line (or inside the graph6 string).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : Error(what + " (line " + std::to_string(line) + ", offset " +
              std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}

  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

// A constructed strategy failed engine verification. Constructors raise
// this instead of returning an unverified strategy.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fflab

#endif  // FFLAB_ERROR_HPP_
