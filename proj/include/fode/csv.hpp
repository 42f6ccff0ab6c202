// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_CSV_HPP
#define FODE_CSV_HPP

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fode
{

// 17 significant digits (printf %.17g), locale independent; "inf", "-inf", "nan".
std::string FormatNumber(double v);

// Header row, comma separator, '\n' line ends. All columns must have equal length.
void WriteCsv(std::ostream &os, const std::vector<std::string> &header,
              const std::vector<std::span<const double>> &columns);

struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

// Parses the format WriteCsv produces (also tolerates '\r\n' and a missing final
// newline). Throws ParseError with line/column on malformed input.
CsvTable ReadCsv(std::string_view text);

}  // namespace fode

#endif  // FODE_CSV_HPP
