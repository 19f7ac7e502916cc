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
#include <vector>

#include "apeval/samples.hpp"

namespace apeval {

/// Grouped representation of a dataset: one group per distinct score, ordered
/// by strictly decreasing score. Group k holds S_k subjects of which Z_k are
/// cases and S_k - Z_k are controls. Ties are never broken; subjects sharing
/// a score are indistinguishable to every downstream computation.
class PartitionTable {
 public:
  /// Validating constructor from grouped counts. `scores` must be strictly
  /// decreasing and finite, every group nonempty, 0 <= cases_k <= size_k.
  static PartitionTable from_counts(std::vector<double> scores,
                                    std::vector<std::int64_t> cases,
                                    std::vector<std::int64_t> sizes);

  std::int64_t group_count() const { return static_cast<std::int64_t>(sizes_.size()); }
  double score(std::int64_t k) const { return scores_[static_cast<std::size_t>(k)]; }
  std::int64_t cases(std::int64_t k) const { return cases_[static_cast<std::size_t>(k)]; }
  std::int64_t controls(std::int64_t k) const {
    return sizes_[static_cast<std::size_t>(k)] - cases_[static_cast<std::size_t>(k)];
  }
  std::int64_t group_size(std::int64_t k) const { return sizes_[static_cast<std::size_t>(k)]; }

  std::span<const double> scores() const { return scores_; }
  std::span<const std::int64_t> case_counts() const { return cases_; }
  std::span<const std::int64_t> group_sizes() const { return sizes_; }

  std::int64_t n() const { return n_; }
  std::int64_t n_cases() const { return n_cases_; }
  std::int64_t n_controls() const { return n_ - n_cases_; }
  double prevalence() const { return static_cast<double>(n_cases_) / static_cast<double>(n_); }

 private:
  PartitionTable() = default;

  std::vector<double> scores_;
  std::vector<std::int64_t> cases_;
  std::vector<std::int64_t> sizes_;
  std::int64_t n_ = 0;
  std::int64_t n_cases_ = 0;
};

/// Groups raw samples by exact score equality into a PartitionTable.
/// Throws EmptyDataset, NonBinaryLabel or NonFiniteScore.
PartitionTable partition(std::span<const LabeledSample> samples);

}  // namespace apeval
