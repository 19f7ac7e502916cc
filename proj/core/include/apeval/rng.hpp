// Copyright 2026 the apeval authors
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

#pragma once

#include <cstdint>
#include <span>

namespace apeval {

/// PCG32 (pcg-random.org, minimal variant): 64-bit state, 64-bit stream
/// selector, 32-bit output. Chosen over std:: engines because its output is
/// identical on every platform and the explicit (seed, stream) pair gives
/// independent substreams for parallel replicates: replicate i of a run
/// seeded with s always draws from Pcg32(s, i), so results do not depend on
/// execution order.
class Pcg32 {
 public:
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = 0u;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  /// Unbiased uniform integer in [0, bound) via rejection.
  std::uint32_t next_below(std::uint32_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    const std::uint64_t hi = next_u32() >> 5;  // 27 bits
    const std::uint64_t lo = next_u32() >> 6;  // 26 bits
    return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
  }

  /// Standard normal deviate (Marsaglia polar method; pairs are cached).
  double next_normal();

  /// Binomial(n, p) as a sum of Bernoulli trials; exact and portable.
  std::int64_t next_binomial(std::int64_t n, double p);

  /// Draws counts ~ multinomial(n; probs) into `out` (same length as probs)
  /// by inverse-CDF sampling of each of the n categories.
  void next_multinomial(std::int64_t n, std::span<const double> probs,
                        std::span<std::int64_t> out);

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 1;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace apeval
