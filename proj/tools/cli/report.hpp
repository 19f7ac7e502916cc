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
#include <string>

namespace apeval::cli {

/// Shortest decimal text that round-trips the exact double; locale-free.
std::string format_double(double value);

std::string format_int(std::int64_t value);

/// Quotes a CSV field only when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

/// Writes to the path, or to stdout when the path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace apeval::cli
