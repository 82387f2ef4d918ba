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

#include "wqaoa/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "wqaoa/errors.hpp"

namespace wqaoa {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

CsvWriter::CsvWriter(std::ostream& os, const std::string& schema, std::vector<std::string> columns)
    : os_(os), columns_(columns.size()) {
  os_ << "# schema=" << schema << " version=" << kCsvSchemaVersion << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << quote(columns[i]);
  os_ << '\n';
}

CsvWriter& CsvWriter::field(const std::string& s) {
  if (in_row_ >= columns_) throw PreconditionError("too many CSV fields in row");
  os_ << (in_row_++ ? "," : "") << quote(s);
  return *this;
}

CsvWriter& CsvWriter::field(double v) { return field(format_number(v)); }

CsvWriter& CsvWriter::field(long long v) { return field(std::to_string(v)); }

void CsvWriter::end_row() {
  if (in_row_ != columns_) throw PreconditionError("CSV row has the wrong number of fields");
  os_ << '\n';
  in_row_ = 0;
}

}  // namespace wqaoa
