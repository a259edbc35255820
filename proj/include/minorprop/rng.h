// Copyright 2026 The minorprop Authors
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

#ifndef MINORPROP_RNG_H_
#define MINORPROP_RNG_H_

#include <cstdint>
#include <random>

namespace minorprop {

// splitmix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from `seed` and a stream tag.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t tag) {
  return Mix64(Mix64(seed) ^ Mix64(tag + 0x5851f42d4c957f2dULL));
}

// Seeded source of randomness. Every random choice in the library flows
// through one of these, so runs are reproducible from the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  // Uniform integer in [lo, hi].
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  // Uniform real in [0, 1).
  double Real() { return std::uniform_real_distribution<double>(0, 1)(engine_); }
  // True with probability p (clamped to [0, 1]).
  bool Bernoulli(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    return Real() < p;
  }
  bool Coin() { return (engine_() >> 63) != 0; }
  std::uint64_t Next() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace minorprop

#endif  // MINORPROP_RNG_H_
