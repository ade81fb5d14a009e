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

#include "hechler/setalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hechler {
namespace {

bool periodicWith(const PeriodicSet::Bits& word, std::size_t d) {
  const std::size_t p = word.size();
  for (std::size_t i = 0; i < p; ++i) {
    if (word[i] != word[(i + d) % p]) return false;
  }
  return true;
}

PeriodicSet::Bits bitsFromWord(std::string_view word) {
  PeriodicSet::Bits bits;
  bits.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') {
      throw Error("bit word may only contain '0' and '1'");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

std::string wordFromBits(const PeriodicSet::Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace

PeriodicSet::PeriodicSet() : period_{false} {}

PeriodicSet PeriodicSet::normalize(Bits prefix, Bits period) {
  if (period.empty()) throw Error("periodic set: empty period");

  const std::size_t p = period.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d == 0 && periodicWith(period, d)) {
      period.resize(d);
      break;
    }
  }

  // Absorb trailing prefix bits that agree with the rotated period.
  while (!prefix.empty() && prefix.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    prefix.pop_back();
  }
  return PeriodicSet(std::move(prefix), std::move(period));
}

PeriodicSet PeriodicSet::fromWords(std::string_view prefix,
                                   std::string_view period) {
  return normalize(bitsFromWord(prefix), bitsFromWord(period));
}

PeriodicSet PeriodicSet::all() { return PeriodicSet({}, {true}); }

PeriodicSet PeriodicSet::finite(std::span<const Natural> elements) {
  Bits prefix;
  for (Natural n : elements) {
    if (n >= prefix.size()) prefix.resize(n + 1, false);
    prefix[n] = true;
  }
  return normalize(std::move(prefix), {false});
}

PeriodicSet PeriodicSet::cofinite(std::span<const Natural> excluded) {
  return complement(finite(excluded));
}

PeriodicSet PeriodicSet::finite(std::initializer_list<Natural> elements) {
  return finite(std::span<const Natural>(elements.begin(), elements.size()));
}

PeriodicSet PeriodicSet::cofinite(std::initializer_list<Natural> excluded) {
  return cofinite(std::span<const Natural>(excluded.begin(), excluded.size()));
}

PeriodicSet PeriodicSet::residue(std::size_t modulus, std::size_t residue) {
  if (modulus == 0) throw Error("residue class: zero modulus");
  Bits period(modulus, false);
  period[residue % modulus] = true;
  return normalize({}, std::move(period));
}

PeriodicSet PeriodicSet::above(Natural n) {
  Bits prefix(n + 1, false);
  return normalize(std::move(prefix), {true});
}

bool PeriodicSet::contains(Natural n) const {
  if (n < prefix_.size()) return prefix_[n];
  return period_[(n - prefix_.size()) % period_.size()];
}

std::string PeriodicSet::prefixWord() const { return wordFromBits(prefix_); }
std::string PeriodicSet::periodWord() const { return wordFromBits(period_); }

bool PeriodicSet::empty() const {
  return cardinalityClass(*this) == Cardinality::empty;
}

bool PeriodicSet::infinite() const {
  return std::find(period_.begin(), period_.end(), true) != period_.end();
}

PeriodicSet booleanOp(SetOp op, const PeriodicSet& a, const PeriodicSet& b) {
  auto apply = [op](bool x, bool y) {
    switch (op) {
      case SetOp::complement: return !x;
      case SetOp::unite: return x || y;
      case SetOp::intersect: return x && y;
      case SetOp::difference: return x && !y;
    }
    return false;
  };
  if (op == SetOp::complement) {
    PeriodicSet::Bits prefix = a.prefix();
    PeriodicSet::Bits period = a.period();
    prefix.flip();
    period.flip();
    return PeriodicSet::normalize(std::move(prefix), std::move(period));
  }

  const std::size_t t = std::max(a.preperiod(), b.preperiod());
  const std::size_t l = std::lcm(a.periodLength(), b.periodLength());
  PeriodicSet::Bits prefix(t);
  PeriodicSet::Bits period(l);
  for (std::size_t n = 0; n < t; ++n) {
    prefix[n] = apply(a.contains(n), b.contains(n));
  }
  for (std::size_t i = 0; i < l; ++i) {
    period[i] = apply(a.contains(t + i), b.contains(t + i));
  }
  return PeriodicSet::normalize(std::move(prefix), std::move(period));
}

PeriodicSet complement(const PeriodicSet& a) {
  return booleanOp(SetOp::complement, a, a);
}
PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b) {
  return booleanOp(SetOp::unite, a, b);
}
PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b) {
  return booleanOp(SetOp::intersect, a, b);
}
PeriodicSet difference(const PeriodicSet& a, const PeriodicSet& b) {
  return booleanOp(SetOp::difference, a, b);
}

bool isSubset(const PeriodicSet& a, const PeriodicSet& b) {
  return difference(a, b).empty();
}

PeriodicSet shift(const PeriodicSet& s, Natural k) {
  PeriodicSet::Bits prefix(k, false);
  prefix.insert(prefix.end(), s.prefix().begin(), s.prefix().end());
  return PeriodicSet::normalize(std::move(prefix), s.period());
}

Cardinality cardinalityClass(const PeriodicSet& s) {
  // Canonical tails of constant sets have period length one.
  if (s.periodLength() == 1) {
    if (s.period()[0]) {
      return s.preperiod() == 0 ? Cardinality::all : Cardinality::cofinite;
    }
    return s.preperiod() == 0 ? Cardinality::empty
                              : Cardinality::finiteNonempty;
  }
  return Cardinality::infiniteCoinfinite;
}

const char* to_string(Cardinality c) {
  switch (c) {
    case Cardinality::empty: return "empty";
    case Cardinality::finiteNonempty: return "finiteNonempty";
    case Cardinality::infiniteCoinfinite: return "infiniteCoinfinite";
    case Cardinality::cofinite: return "cofinite";
    case Cardinality::all: return "all";
  }
  return "?";
}

std::optional<Natural> minAbove(const PeriodicSet& s, Natural n) {
  if (n == std::numeric_limits<Natural>::max()) return std::nullopt;
  const Natural start = n + 1;
  const std::size_t t = s.preperiod();
  const std::size_t p = s.periodLength();
  for (Natural i = start; i < t; ++i) {
    if (s.prefix()[i]) return i;
  }
  const Natural base = std::max<Natural>(start, t);
  const std::size_t offset = (base - t) % p;
  for (std::size_t j = 0; j < p; ++j) {
    if (s.period()[(offset + j) % p]) return base + j;
  }
  return std::nullopt;
}

std::optional<Natural> minElement(const PeriodicSet& s) {
  if (s.contains(0)) return 0;
  return minAbove(s, 0);
}

std::optional<Natural> maxElement(const PeriodicSet& s) {
  if (s.infinite()) return std::nullopt;
  for (std::size_t i = s.preperiod(); i-- > 0;) {
    if (s.prefix()[i]) return i;
  }
  return std::nullopt;
}

std::optional<Natural> count(const PeriodicSet& s) {
  if (s.infinite()) return std::nullopt;
  return static_cast<Natural>(
      std::count(s.prefix().begin(), s.prefix().end(), true));
}

Natural enumerate(const PeriodicSet& s, Natural k) {
  const auto& prefix = s.prefix();
  const auto& period = s.period();
  const Natural inPrefix = std::count(prefix.begin(), prefix.end(), true);
  if (k < inPrefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] && k-- == 0) return i;
    }
  }
  const Natural perPeriod = std::count(period.begin(), period.end(), true);
  if (perPeriod == 0) {
    throw Error("enumerate: index " + std::to_string(k) +
                " beyond a finite set of size " + std::to_string(inPrefix));
  }
  Natural rest = k - inPrefix;
  const Natural cycles = rest / perPeriod;
  rest %= perPeriod;
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (period[i] && rest-- == 0) {
      return prefix.size() + cycles * period.size() + i;
    }
  }
  throw Error("enumerate: internal inconsistency");
}

Rational density(const PeriodicSet& s) {
  const Natural ones = std::count(s.period().begin(), s.period().end(), true);
  const Natural len = s.periodLength();
  const Natural g = std::gcd(ones, len);
  return {ones / g, len / g};
}

std::string to_string(const PeriodicSet& s) {
  switch (cardinalityClass(s)) {
    case Cardinality::empty: return "none";
    case Cardinality::all: return "all";
    case Cardinality::finiteNonempty:
    case Cardinality::cofinite: {
      const bool fin = !s.infinite();
      std::string out = fin ? "(fin" : "(cofin";
      for (std::size_t n = 0; n < s.preperiod(); ++n) {
        if (s.contains(n) == fin) out += " " + std::to_string(n);
      }
      return out + ")";
    }
    case Cardinality::infiniteCoinfinite: break;
  }
  return "(per \"" + s.prefixWord() + "\" \"" + s.periodWord() + "\")";
}

std::string to_string(std::span<const Natural> seq) {
  std::string out = "<";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq[i]);
  }
  return out + ">";
}

}  // namespace hechler
