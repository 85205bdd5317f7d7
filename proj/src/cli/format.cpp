// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace movwall::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*e", kSignificantDigits - 1, v);
  return buf;
}

double round_significant(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_double(v).c_str(), nullptr);
}

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return format_double(v);
  return round_significant(v);
}

nlohmann::json json_matrix(const Mat2& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < 2; ++i) {
    re.push_back({json_number(m(i, 0).real()), json_number(m(i, 1).real())});
    im.push_back({json_number(m(i, 0).imag()), json_number(m(i, 1).imag())});
  }
  return {{"re", re}, {"im", im}};
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw InvalidArgument("CSV row width does not match header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    return s + '\n';
  };
  std::string out = line(header_);
  for (const auto& r : rows_) out += line(r);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

}  // namespace movwall::cli
