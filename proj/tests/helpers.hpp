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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "apeval/partition.hpp"
#include "apeval/rng.hpp"
#include "apeval/samples.hpp"

namespace apeval::testing {

inline std::vector<LabeledSample> make_samples(std::span<const double> scores,
                                               std::span<const int> labels) {
  std::vector<LabeledSample> samples;
  samples.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    samples.push_back({scores[i], labels[i]});
  }
  return samples;
}

/// Four subjects at distinct scores, labels alternating 1,0,1,0 from the top.
inline std::vector<LabeledSample> alternating_four() {
  return {{4.0, 1}, {3.0, 0}, {2.0, 1}, {1.0, 0}};
}

/// Four subjects at distinct scores with the cases on top.
inline std::vector<LabeledSample> perfect_four() {
  return {{4.0, 1}, {3.0, 1}, {2.0, 0}, {1.0, 0}};
}

/// Four subjects sharing one score, two of them cases.
inline std::vector<LabeledSample> all_tied_four() {
  return {{1.0, 1}, {1.0, 0}, {1.0, 1}, {1.0, 0}};
}

/// O(n^2) pair-counting statistic: (concordant + tied/2) / (n1*n0),
/// enumerated over every (case, control) pair. Independent of the grouped
/// implementation path.
inline double brute_force_auc(std::span<const LabeledSample> samples) {
  std::int64_t concordant2 = 0;  // doubled, so ties add 1 instead of 0.5
  std::int64_t n1 = 0;
  std::int64_t n0 = 0;
  for (const auto& a : samples) {
    if (a.label == 1) {
      ++n1;
      for (const auto& b : samples) {
        if (b.label == 0) {
          if (a.score > b.score) concordant2 += 2;
          else if (a.score == b.score) concordant2 += 1;
        }
      }
    } else {
      ++n0;
    }
  }
  return static_cast<double>(concordant2) / static_cast<double>(2 * n1 * n0);
}

/// Mean precision-at-rank over case positions, for datasets without ties:
/// sort by descending score, average h(k)/k over the ranks k holding a case.
inline double brute_force_ap_no_ties(std::span<const LabeledSample> samples) {
  std::vector<LabeledSample> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledSample& a, const LabeledSample& b) { return a.score > b.score; });
  double sum = 0.0;
  std::int64_t hits = 0;
  std::int64_t n1 = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].label == 1) {
      ++hits;
      ++n1;
      sum += static_cast<double>(hits) / static_cast<double>(k + 1);
    }
  }
  return sum / static_cast<double>(n1);
}

/// Direct evaluation of the grouped weighted sum from sorted raw samples,
/// written against the score list rather than a PartitionTable.
inline double direct_grouped_ap(std::span<const LabeledSample> samples) {
  std::vector<LabeledSample> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledSample& a, const LabeledSample& b) { return a.score > b.score; });
  std::int64_t n1 = 0;
  for (const auto& s : sorted) n1 += s.label;
  double result = 0.0;
  std::size_t start = 0;
  std::int64_t h = 0;
  while (start < sorted.size()) {
    std::size_t stop = start;
    std::int64_t group_cases = 0;
    while (stop < sorted.size() && sorted[stop].score == sorted[start].score) {
      group_cases += sorted[stop].label;
      ++stop;
    }
    h += group_cases;
    const double precision = static_cast<double>(h) / static_cast<double>(stop);
    result += precision * (static_cast<double>(group_cases) / static_cast<double>(n1));
    start = stop;
  }
  return result;
}

/// Random dataset with scores drawn from a small integer grid (ties likely)
/// or a continuous range (ties impossible), at least one subject per class.
inline std::vector<LabeledSample> random_dataset(Pcg32& rng, std::int64_t max_n,
                                                 bool with_ties) {
  const auto n = static_cast<std::int64_t>(2 + rng.next_below(static_cast<std::uint32_t>(max_n - 1)));
  std::vector<LabeledSample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    double score = 0.0;
    if (with_ties) {
      score = static_cast<double>(rng.next_below(8));
    } else {
      score = rng.next_double();
    }
    samples.push_back({score, static_cast<int>(rng.next_below(2))});
  }
  // Force both classes to be present.
  samples[0].label = 1;
  samples[samples.size() - 1].label = 0;
  return samples;
}

}  // namespace apeval::testing
