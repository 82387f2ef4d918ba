// Copyright 2026 The wqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wqaoa {

inline constexpr int kCsvSchemaVersion = 1;

// Shortest round-trip-safe rendering at 12 significant digits.
std::string format_number(double v);

// Minimal CSV writer: a "# schema=<name> version=<v>" comment line, then a
// header, then rows. Fields containing separators are quoted.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::string& schema, std::vector<std::string> columns);

  CsvWriter& field(const std::string& s);
  CsvWriter& field(double v);
  CsvWriter& field(long long v);
  CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
  CsvWriter& field(std::size_t v) { return field(static_cast<long long>(v)); }
  void end_row();

 private:
  std::ostream& os_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

}  // namespace wqaoa
