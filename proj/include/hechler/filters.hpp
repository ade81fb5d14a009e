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

#ifndef HECHLER_FILTERS_HPP_
#define HECHLER_FILTERS_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hechler/setalg.hpp"

namespace hechler {

enum class FilterKind { frechet, density, lazyUltra };

struct Decision {
  PeriodicSet set;
  bool verdict = false;
  bool operator==(const Decision&) const = default;
};

// A filter on the naturals, restricted to eventually periodic sets. Every
// kind extends the cofinite filter.
//
// The lazy ultrafilter is decided on demand: a query S is accepted iff
// kernel ∩ S is infinite, and the kernel is then narrowed to kernel ∩ S (or
// to kernel \ S on rejection). The kernel therefore stays infinite and the
// accepted sets have the finite intersection property. Verdicts depend on
// query order, so every new verdict is appended to the decision log.
//
// Frechet and density handles are stateless. A lazy ultrafilter handle is
// stateful and must not be shared between concurrent solves.
class Filter {
 public:
  static Filter frechet();
  static Filter density();
  // Throws if seed is finite.
  static Filter lazyUltra(PeriodicSet seed = PeriodicSet::all());

  // Rebuilds a lazy ultrafilter from its seed by re-running the logged
  // queries. Throws if a verdict does not reproduce. Logged verdicts are
  // known at once, while kernel() advances as the logged queries are asked
  // again in order, so a deterministic rerun sees the kernels of the
  // original run.
  static Filter replay(const PeriodicSet& seed, std::span<const Decision> log);

  FilterKind kind() const { return kind_; }

  bool inFilter(const PeriodicSet& s);
  // Membership in F^+: the complement is not in F.
  bool isPositive(const PeriodicSet& s);
  // Lazy ultrafilter decision. Throws for other kinds.
  bool ultraDecide(const PeriodicSet& s);

  const PeriodicSet& seed() const { return seed_; }
  const PeriodicSet& kernel() const {
    return cursor_ < replayed_ ? progress_ : kernel_;
  }
  const std::vector<Decision>& decisionLog() const { return log_; }

  // A frozen lazy ultrafilter answers logged queries only; any other query
  // throws UnloggedQuery. Certificate checking runs frozen.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  // frechet, density, or ultra:<seed literal>.
  std::string describe() const;

  class UnloggedQuery : public Error {
   public:
    using Error::Error;
  };

 private:
  explicit Filter(FilterKind kind) : kind_(kind) {}

  FilterKind kind_;
  PeriodicSet seed_ = PeriodicSet::all();
  PeriodicSet kernel_ = PeriodicSet::all();
  std::vector<Decision> log_;
  std::map<PeriodicSet, bool> memo_;
  bool frozen_ = false;
  // Replay position: log_[0, replayed_) came from a replayed log, of which
  // the first cursor_ entries have been asked again.
  std::size_t replayed_ = 0;
  std::size_t cursor_ = 0;
  PeriodicSet progress_;
};

const char* to_string(FilterKind kind);

}  // namespace hechler

#endif  // HECHLER_FILTERS_HPP_
