// Copyright 2026 The catcsum Authors
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

#include <filesystem>
#include <string>
#include <vector>

namespace catcsum::experiments {

// 17 significant digits, "%.17g" style.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws invalid_argument when the column is absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> numeric_column(const std::string& name) const;
};

// RFC 4180: fields containing ',', '"', CR or LF are quoted and embedded
// quotes doubled. Records end with LF.
std::string csv_escape(const std::string& field);
std::string write_csv(const CsvTable& table);
// Accepts LF or CRLF record endings. Throws io_error on ragged rows or
// unterminated quotes.
CsvTable parse_csv(const std::string& text);

void write_file(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace catcsum::experiments
