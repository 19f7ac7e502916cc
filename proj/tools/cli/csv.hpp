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

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "apeval/errors.hpp"
#include "apeval/samples.hpp"

namespace apeval::cli {

/// Input problems with the file location already in the message.
class CsvError : public InputError {
 public:
  using InputError::InputError;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // row r is file line r + 2

  /// Index of a named column; throws CsvError naming the candidates.
  std::size_t column(const std::string& name) const;
};

/// Parses RFC-4180-style CSV: comma separated, optional double quotes with
/// "" escapes, LF or CRLF line ends. Every row must match the header width.
CsvTable parse_csv(std::istream& in);

CsvTable load_csv(const std::string& path);

/// Extracts one score column + the label column as samples. Labels must be
/// exactly "0" or "1"; scores must be finite decimal numbers; offending rows
/// are reported with their file line number.
std::vector<LabeledSample> extract_samples(const CsvTable& table,
                                           const std::string& label_col,
                                           const std::string& score_col);

/// Names of all columns except the label column, in file order.
std::vector<std::string> score_columns(const CsvTable& table, const std::string& label_col);

}  // namespace apeval::cli
