// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "movwall/common.hpp"

namespace movwall::cli {

inline constexpr int kSignificantDigits = 9;

/// Scientific notation with 9 significant digits, independent of locale.
std::string format_double(double v);

/// v rounded to 9 significant digits; JSON output goes through this so the
/// shortest round-trip printer yields stable text.
double round_significant(double v);

nlohmann::json json_number(double v);
/// {"re": [[..], [..]], "im": [[..], [..]]}
nlohmann::json json_matrix(const Mat2& m);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  [[nodiscard]] const std::vector<std::string>& header() const noexcept { return header_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  /// Comma separated, LF line endings, trailing newline.
  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes bytes unchanged (binary mode, so LF stays LF). Throws on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace movwall::cli
