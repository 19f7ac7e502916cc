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

#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace apeval::cli {
namespace {

std::vector<std::string> split_fields(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      if (!current.empty()) {
        throw CsvError("line " + std::to_string(line_no) + ": stray quote inside field");
      }
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (quoted) {
    throw CsvError("line " + std::to_string(line_no) + ": unterminated quoted field");
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string trimmed(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && (s[begin] == ' ' || s[begin] == '\t')) ++begin;
  while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
  return s.substr(begin, end - begin);
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  std::string available;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) available += ", ";
    available += "'" + header[i] + "'";
  }
  throw CsvError("column '" + name + "' not found; available: " + available);
}

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    auto fields = split_fields(line, line_no);
    if (line_no == 1) {
      for (auto& f : fields) f = trimmed(f);
      table.header = std::move(fields);
      if (table.header.empty() || (table.header.size() == 1 && table.header[0].empty())) {
        throw CsvError("line 1: empty header");
      }
    } else {
      if (fields.size() != table.header.size()) {
        throw CsvError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.header.size()) + " fields, got " +
                       std::to_string(fields.size()));
      }
      table.rows.push_back(std::move(fields));
    }
  }
  if (line_no == 0) throw CsvError("input is empty");
  return table;
}

CsvTable load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open input file '" + path + "'");
  return parse_csv(in);
}

std::vector<LabeledSample> extract_samples(const CsvTable& table,
                                           const std::string& label_col,
                                           const std::string& score_col) {
  const std::size_t label_index = table.column(label_col);
  const std::size_t score_index = table.column(score_col);
  if (table.rows.empty()) throw CsvError("no data rows");

  std::vector<LabeledSample> samples;
  samples.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::size_t line_no = r + 2;
    const std::string label_text = trimmed(table.rows[r][label_index]);
    int label = 0;
    if (label_text == "0") {
      label = 0;
    } else if (label_text == "1") {
      label = 1;
    } else {
      throw CsvError("line " + std::to_string(line_no) + ": label '" + label_text +
                     "' is not 0 or 1");
    }

    const std::string score_text = trimmed(table.rows[r][score_index]);
    if (score_text.empty()) {
      throw CsvError("line " + std::to_string(line_no) + ": empty score in column '" +
                     score_col + "'");
    }
    double score = 0.0;
    const char* begin = score_text.data();
    const char* end = begin + score_text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, score);
    if (ec != std::errc{} || ptr != end) {
      throw CsvError("line " + std::to_string(line_no) + ": score '" + score_text +
                     "' in column '" + score_col + "' is not numeric");
    }
    if (!std::isfinite(score)) {
      throw CsvError("line " + std::to_string(line_no) + ": score '" + score_text +
                     "' in column '" + score_col + "' is not finite");
    }
    samples.push_back({score, label});
  }
  return samples;
}

std::vector<std::string> score_columns(const CsvTable& table, const std::string& label_col) {
  const std::size_t label_index = table.column(label_col);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i != label_index) names.push_back(table.header[i]);
  }
  if (names.empty()) {
    throw CsvError("no score columns besides the label column '" + label_col + "'");
  }
  return names;
}

}  // namespace apeval::cli
