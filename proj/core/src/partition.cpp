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

#include "apeval/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "apeval/errors.hpp"

namespace apeval {

PartitionTable PartitionTable::from_counts(std::vector<double> scores,
                                           std::vector<std::int64_t> cases,
                                           std::vector<std::int64_t> sizes) {
  if (scores.empty()) throw EmptyDataset();
  if (scores.size() != cases.size() || scores.size() != sizes.size()) {
    throw DomainError("from_counts: scores, cases and sizes must have equal length");
  }
  for (std::size_t k = 0; k < scores.size(); ++k) {
    if (!std::isfinite(scores[k])) {
      throw NonFiniteScore("group " + std::to_string(k + 1) + ": score is not finite");
    }
    if (k > 0 && !(scores[k] < scores[k - 1])) {
      throw DomainError("from_counts: scores must be strictly decreasing");
    }
    if (sizes[k] < 1) throw DomainError("from_counts: every group must be nonempty");
    if (cases[k] < 0 || cases[k] > sizes[k]) {
      throw DomainError("from_counts: case count outside [0, group size]");
    }
  }
  PartitionTable table;
  table.scores_ = std::move(scores);
  table.cases_ = std::move(cases);
  table.sizes_ = std::move(sizes);
  table.n_ = std::accumulate(table.sizes_.begin(), table.sizes_.end(), std::int64_t{0});
  table.n_cases_ = std::accumulate(table.cases_.begin(), table.cases_.end(), std::int64_t{0});
  return table;
}

PartitionTable partition(std::span<const LabeledSample> samples) {
  if (samples.empty()) throw EmptyDataset();

  std::vector<LabeledSample> sorted(samples.begin(), samples.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!std::isfinite(sorted[i].score)) {
      throw NonFiniteScore("sample " + std::to_string(i + 1) + ": score is not finite");
    }
    if (sorted[i].label != 0 && sorted[i].label != 1) {
      throw NonBinaryLabel("sample " + std::to_string(i + 1) + ": label " +
                           std::to_string(sorted[i].label) + " is not 0 or 1");
    }
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledSample& a, const LabeledSample& b) { return a.score > b.score; });

  std::vector<double> scores;
  std::vector<std::int64_t> cases;
  std::vector<std::int64_t> sizes;
  for (const LabeledSample& s : sorted) {
    if (scores.empty() || s.score != scores.back()) {
      scores.push_back(s.score);
      cases.push_back(0);
      sizes.push_back(0);
    }
    sizes.back() += 1;
    cases.back() += s.label;
  }
  return PartitionTable::from_counts(std::move(scores), std::move(cases), std::move(sizes));
}

std::vector<LabeledSample> inflate_controls(std::span<const LabeledSample> samples,
                                            std::int64_t m) {
  if (m < 1) throw DomainError("inflate_controls: replication factor must be >= 1");
  std::vector<LabeledSample> out(samples.begin(), samples.end());
  for (std::int64_t rep = 1; rep < m; ++rep) {
    for (const LabeledSample& s : samples) {
      if (s.label == 0) out.push_back(s);
    }
  }
  return out;
}

}  // namespace apeval
