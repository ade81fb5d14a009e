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

#include "hechler/filters.hpp"

namespace hechler {

Filter Filter::frechet() { return Filter(FilterKind::frechet); }

Filter Filter::density() { return Filter(FilterKind::density); }

Filter Filter::lazyUltra(PeriodicSet seed) {
  if (!seed.infinite()) {
    throw Error("lazy ultrafilter: seed set " + to_string(seed) +
                " is finite");
  }
  Filter f(FilterKind::lazyUltra);
  f.seed_ = seed;
  f.kernel_ = std::move(seed);
  return f;
}

Filter Filter::replay(const PeriodicSet& seed, std::span<const Decision> log) {
  Filter f = lazyUltra(seed);
  for (const Decision& d : log) {
    if (f.ultraDecide(d.set) != d.verdict) {
      throw Error("decision log does not replay at " + to_string(d.set));
    }
  }
  f.replayed_ = f.log_.size();
  f.progress_ = f.seed_;
  return f;
}

bool Filter::inFilter(const PeriodicSet& s) {
  switch (kind_) {
    case FilterKind::frechet: {
      const Cardinality c = cardinalityClass(s);
      return c == Cardinality::cofinite || c == Cardinality::all;
    }
    case FilterKind::density:
      return hechler::density(s) == Rational{1, 1};
    case FilterKind::lazyUltra:
      return ultraDecide(s);
  }
  return false;
}

bool Filter::isPositive(const PeriodicSet& s) {
  return !inFilter(complement(s));
}

bool Filter::ultraDecide(const PeriodicSet& s) {
  if (kind_ != FilterKind::lazyUltra) {
    throw Error("ultraDecide on a non-ultrafilter handle");
  }
  if (auto it = memo_.find(s); it != memo_.end()) {
    if (cursor_ < replayed_ && log_[cursor_].set == s) {
      progress_ = it->second ? intersect(progress_, s) : difference(progress_, s);
      ++cursor_;
    }
    return it->second;
  }
  if (frozen_) throw UnloggedQuery("query outside decision log: " + to_string(s));

  PeriodicSet meet = intersect(kernel_, s);
  const bool verdict = meet.infinite();
  kernel_ = verdict ? std::move(meet) : difference(kernel_, s);
  memo_.emplace(s, verdict);
  log_.push_back({s, verdict});
  return verdict;
}

std::string Filter::describe() const {
  switch (kind_) {
    case FilterKind::frechet: return "frechet";
    case FilterKind::density: return "density";
    case FilterKind::lazyUltra: return "ultra:" + to_string(seed_);
  }
  return "?";
}

const char* to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::frechet: return "frechet";
    case FilterKind::density: return "density";
    case FilterKind::lazyUltra: return "ultra";
  }
  return "?";
}

}  // namespace hechler
