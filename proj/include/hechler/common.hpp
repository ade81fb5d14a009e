// Copyright 2026 The hechler Authors.
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

#ifndef HECHLER_COMMON_HPP_
#define HECHLER_COMMON_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hechler {

using Natural = std::uint64_t;

// A finite sequence of naturals: a node of the tree of finite sequences.
using Sequence = std::vector<Natural>;

// Raised when an operation's precondition does not hold.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the textual readers; carries a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An eventually periodic infinite sequence: stem followed by cycle repeated
// forever. The cycle is never empty.
class Lasso {
 public:
  Lasso(Sequence stem, Sequence cycle)
      : stem_(std::move(stem)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw Error("lasso: empty repeating word");
  }

  const Sequence& stem() const { return stem_; }
  const Sequence& cycle() const { return cycle_; }

  Natural at(std::size_t index) const {
    if (index < stem_.size()) return stem_[index];
    return cycle_[(index - stem_.size()) % cycle_.size()];
  }

  Sequence unroll(std::size_t length) const {
    Sequence out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(at(i));
    return out;
  }

  bool operator==(const Lasso&) const = default;

 private:
  Sequence stem_;
  Sequence cycle_;
};

std::string to_string(std::span<const Natural> seq);

}  // namespace hechler

#endif  // HECHLER_COMMON_HPP_
