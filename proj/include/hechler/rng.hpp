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

#ifndef HECHLER_RNG_HPP_
#define HECHLER_RNG_HPP_

#include <cstdint>
#include <random>

namespace hechler {

// Seeded source used for every randomized choice. Only the raw mt19937_64
// stream is used so that draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  bool coin() { return (engine_() >> 63) != 0; }

  // Failures before the first success of a fair coin.
  std::uint64_t geometric() {
    std::uint64_t k = 0;
    while (!coin()) ++k;
    return k;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hechler

#endif  // HECHLER_RNG_HPP_
