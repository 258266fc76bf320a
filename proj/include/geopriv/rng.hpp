//
// Copyright 2026 The geopriv Authors
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
//

#ifndef GEOPRIV_RNG_HPP_
#define GEOPRIV_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace geopriv {

// Master seed for a mechanism invocation. Derived seeds (see derive_seed)
// make parallel evaluation deterministic regardless of scheduling.
struct Seed {
  std::uint64_t value = 0;
};

// SplitMix64 finalizer: a full-period 64-bit avalanche mixer. Every output
// bit depends on every input bit.
constexpr std::uint64_t avalanche64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// 64-bit FNV-1a for deriving stable identifiers from strings.
constexpr std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Mixes a master seed with an ordered list of domain-separation parts
// (user hash, mechanism id, epsilon index, ...). Each part is absorbed
// through the avalanche so that nearby indices yield unrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = avalanche64(master + 0x9e3779b97f4a7c15ULL);
  for (const std::uint64_t p : parts) {
    h = avalanche64(h ^ (p + 0x9e3779b97f4a7c15ULL));
  }
  return h;
}

// Deterministic uniform generator. Uniform doubles are produced from the top
// 53 bits of the engine output, so results are reproducible bit-for-bit on
// any platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  explicit Rng(Seed seed) : eng_(seed.value) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace geopriv

#endif  // GEOPRIV_RNG_HPP_
