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

#include "apeval/rng.hpp"

#include <cmath>
#include <vector>

#include "apeval/errors.hpp"

namespace apeval {

std::uint32_t Pcg32::next_below(std::uint32_t bound) {
  if (bound == 0) throw DomainError("next_below: bound must be positive");
  // Reject the low remainder zone so every value in [0, bound) is equally
  // likely.
  const std::uint32_t threshold = (-bound) % bound;
  for (;;) {
    const std::uint32_t r = next_u32();
    if (r >= threshold) return r % bound;
  }
}

double Pcg32::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  for (;;) {
    const double u = 2.0 * next_double() - 1.0;
    const double v = 2.0 * next_double() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * factor;
    has_cached_normal_ = true;
    return u * factor;
  }
}

std::int64_t Pcg32::next_binomial(std::int64_t n, double p) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) {
    throw DomainError("next_binomial: need n >= 0 and p in [0,1]");
  }
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (next_double() < p) ++successes;
  }
  return successes;
}

void Pcg32::next_multinomial(std::int64_t n, std::span<const double> probs,
                             std::span<std::int64_t> out) {
  if (out.size() != probs.size()) {
    throw DomainError("next_multinomial: output span size must match probs");
  }
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    acc += probs[k];
    cdf[k] = acc;
  }
  // Guard the top of the table against round-off so a draw of u close to 1
  // cannot fall past the final category.
  if (!cdf.empty()) cdf.back() = 1.0;

  for (auto& c : out) c = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = next_double();
    std::size_t lo = 0;
    std::size_t hi = cdf.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (u < cdf[mid]) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out[lo] += 1;
  }
}

}  // namespace apeval
