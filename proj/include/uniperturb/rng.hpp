// Copyright 2026 The uniperturb Authors.
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

#ifndef UNIPERTURB_RNG_HPP_
#define UNIPERTURB_RNG_HPP_

#include <cstdint>
#include <random>

namespace uniperturb {

// Seedable, portable random source. mt19937_64 output is bit-exact per the
// C++ standard; the standard *distributions* are not, so uniform01() and
// uniform_int() are implemented here from raw engine words.
//
// Stream ordering contract (relied on for reproducible attack runs):
//   - uniform01() consumes exactly one engine word.
//   - uniform_int(n) consumes one engine word per rejection round
//     (usually one).
// Callers document their own draw order on top of this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1): 53 mantissa bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on [0, n). Unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uniperturb

#endif  // UNIPERTURB_RNG_HPP_
