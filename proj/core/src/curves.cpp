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

#include "apeval/curves.hpp"

#include "apeval/errors.hpp"

namespace apeval {

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::hit: return "hit";
    case CurveKind::roc: return "roc";
    case CurveKind::pr: return "pr";
  }
  return "?";
}

Curve hit_curve(const PartitionTable& table) {
  Curve curve{CurveKind::hit, {}};
  curve.points.reserve(static_cast<std::size_t>(table.group_count()) + 1);
  curve.points.push_back({0.0, 0.0});
  const auto n = static_cast<double>(table.n());
  std::int64_t d = 0;
  std::int64_t h = 0;
  for (std::int64_t k = 0; k < table.group_count(); ++k) {
    d += table.group_size(k);
    h += table.cases(k);
    curve.points.push_back({static_cast<double>(d) / n, static_cast<double>(h) / n});
  }
  return curve;
}

Curve roc_curve(const PartitionTable& table) {
  if (table.n_cases() == 0 || table.n_controls() == 0) {
    throw DegenerateClass("roc_curve requires at least one case and one control");
  }
  Curve curve{CurveKind::roc, {}};
  curve.points.reserve(static_cast<std::size_t>(table.group_count()) + 1);
  curve.points.push_back({0.0, 0.0});
  const auto n1 = static_cast<double>(table.n_cases());
  const auto n0 = static_cast<double>(table.n_controls());
  std::int64_t d = 0;
  std::int64_t h = 0;
  for (std::int64_t k = 0; k < table.group_count(); ++k) {
    d += table.group_size(k);
    h += table.cases(k);
    curve.points.push_back({static_cast<double>(d - h) / n0, static_cast<double>(h) / n1});
  }
  return curve;
}

Curve pr_curve(const PartitionTable& table) {
  if (table.n_cases() == 0 || table.n_controls() == 0) {
    throw DegenerateClass("pr_curve requires at least one case and one control");
  }
  Curve curve{CurveKind::pr, {}};
  curve.points.reserve(static_cast<std::size_t>(table.group_count()));
  const auto n1 = static_cast<double>(table.n_cases());
  std::int64_t d = 0;
  std::int64_t h = 0;
  for (std::int64_t k = 0; k < table.group_count(); ++k) {
    d += table.group_size(k);
    h += table.cases(k);
    curve.points.push_back({static_cast<double>(h) / n1,
                            static_cast<double>(h) / static_cast<double>(d)});
  }
  return curve;
}

}  // namespace apeval
