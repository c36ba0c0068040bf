// Copyright 2026 The vContact Authors
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

#ifndef VCONTACT_COUNTER_RNG_H_
#define VCONTACT_COUNTER_RNG_H_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace vcontact {

// Stateless random source: every draw is a pure function of the seed and a
// caller-supplied counter tuple, so results do not depend on draw order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Bits(std::initializer_list<std::uint64_t> counter) const {
    std::uint64_t h = Mix(seed_ ^ 0x6a09e667f3bcc909ULL);
    for (const std::uint64_t word : counter) h = Mix(h ^ Mix(word + kGolden));
    return h;
  }

  // Uniform in (0, 1).
  double Uniform(std::initializer_list<std::uint64_t> counter) const {
    return (static_cast<double>(Bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller over two derived uniforms.
  double Gaussian(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                  std::uint64_t d) const {
    const double u1 = Uniform({a, b, c, d, 0});
    const double u2 = Uniform({a, b, c, d, 1});
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  // splitmix64 finalizer.
  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace vcontact

#endif  // VCONTACT_COUNTER_RNG_H_
