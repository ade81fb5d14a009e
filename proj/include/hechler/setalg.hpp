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

#ifndef HECHLER_SETALG_HPP_
#define HECHLER_SETALG_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hechler/common.hpp"

namespace hechler {

// An eventually periodic subset of the naturals.
//
// Stored as a prefix word (membership of 0..t-1) and a period word (membership
// of n >= t is period[(n - t) % p]). Every constructor canonicalizes: p is the
// least period of the tail and t is the least preperiod for that p, so two
// values denote the same set iff they compare equal.
class PeriodicSet {
 public:
  using Bits = std::vector<bool>;

  // The empty set.
  PeriodicSet();

  // Canonical form of the set denoted by (prefix, period). Throws on an empty
  // period.
  static PeriodicSet normalize(Bits prefix, Bits period);

  // Parses "0110" style words; any character other than '0'/'1' is an error.
  static PeriodicSet fromWords(std::string_view prefix, std::string_view period);

  static PeriodicSet all();
  static PeriodicSet none() { return PeriodicSet(); }
  static PeriodicSet finite(std::span<const Natural> elements);
  static PeriodicSet cofinite(std::span<const Natural> excluded);
  static PeriodicSet finite(std::initializer_list<Natural> elements);
  static PeriodicSet cofinite(std::initializer_list<Natural> excluded);
  // {n : n mod modulus == residue}.
  static PeriodicSet residue(std::size_t modulus, std::size_t residue);
  // (n, infinity).
  static PeriodicSet above(Natural n);

  bool contains(Natural n) const;

  const Bits& prefix() const { return prefix_; }
  const Bits& period() const { return period_; }
  std::size_t preperiod() const { return prefix_.size(); }
  std::size_t periodLength() const { return period_.size(); }

  std::string prefixWord() const;
  std::string periodWord() const;

  bool empty() const;
  bool infinite() const;

  auto operator<=>(const PeriodicSet&) const = default;
  bool operator==(const PeriodicSet&) const = default;

 private:
  PeriodicSet(Bits prefix, Bits period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {}

  Bits prefix_;
  Bits period_;
};

enum class SetOp { complement, unite, intersect, difference };

// Exact boolean combination; the result is canonical. complement ignores b.
PeriodicSet booleanOp(SetOp op, const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet complement(const PeriodicSet& a);
PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet difference(const PeriodicSet& a, const PeriodicSet& b);
bool isSubset(const PeriodicSet& a, const PeriodicSet& b);

// {n + k : n in s}.
PeriodicSet shift(const PeriodicSet& s, Natural k);

enum class Cardinality { empty, finiteNonempty, infiniteCoinfinite, cofinite, all };

Cardinality cardinalityClass(const PeriodicSet& s);
const char* to_string(Cardinality c);

// Least element strictly greater than n.
std::optional<Natural> minAbove(const PeriodicSet& s, Natural n);
std::optional<Natural> minElement(const PeriodicSet& s);
// Largest element of a finite nonempty set.
std::optional<Natural> maxElement(const PeriodicSet& s);
// Number of elements, or nullopt for infinite sets.
std::optional<Natural> count(const PeriodicSet& s);

// The k-th smallest element (0-based). Throws when s is finite and k >= |s|.
Natural enumerate(const PeriodicSet& s, Natural k);

struct Rational {
  Natural num = 0;
  Natural den = 1;
  bool operator==(const Rational&) const = default;
};

// Natural density: the fraction of ones in the period word, reduced.
Rational density(const PeriodicSet& s);

// Printed as none, all, (fin n...), (cofin n...) or (per "prefix" "period"),
// whichever applies first.
std::string to_string(const PeriodicSet& s);

}  // namespace hechler

template <>
struct std::hash<hechler::PeriodicSet> {
  std::size_t operator()(const hechler::PeriodicSet& s) const noexcept {
    std::size_t h = std::hash<std::vector<bool>>{}(s.prefix());
    return h * 1000003u ^ std::hash<std::vector<bool>>{}(s.period());
  }
};

#endif  // HECHLER_SETALG_HPP_
