// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include "fode/errors.hpp"

namespace fode
{

std::string FormatNumber(double v)
{
  if (std::isnan(v))
  {
    return "nan";
  }
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  std::array<char, 64> buf{};
  const auto result =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return {buf.data(), result.ptr};
}

void WriteCsv(std::ostream &os, const std::vector<std::string> &header,
              const std::vector<std::span<const double>> &columns)
{
  if (header.size() != columns.size())
  {
    throw std::invalid_argument("CSV header and column count differ");
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto &c : columns)
  {
    if (c.size() != rows)
    {
      throw std::invalid_argument("CSV columns must have equal length");
    }
  }
  for (std::size_t k = 0; k < header.size(); k++)
  {
    os << (k ? "," : "") << header[k];
  }
  os << '\n';
  std::string line;
  for (std::size_t r = 0; r < rows; r++)
  {
    line.clear();
    for (std::size_t k = 0; k < columns.size(); k++)
    {
      if (k)
      {
        line += ',';
      }
      line += FormatNumber(columns[k][r]);
    }
    line += '\n';
    os << line;
  }
}

namespace
{

std::vector<std::string_view> SplitFields(std::string_view line)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true)
  {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos)
    {
      return fields;
    }
    start = comma + 1;
  }
}

double ParseField(std::string_view field, std::size_t line, std::size_t column)
{
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
  {
    field.remove_prefix(1);
    column++;
  }
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
  {
    field.remove_suffix(1);
  }
  double v = 0.0;
  const auto *first = field.data();
  const auto *last = field.data() + field.size();
  if (!field.empty() && field.front() == '+')
  {
    first++;
  }
  const auto result = std::from_chars(first, last, v);
  if (field.empty() || result.ec != std::errc() || result.ptr != last)
  {
    throw ParseError(line, column, "expected a number, got '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

CsvTable ReadCsv(std::string_view text)
{
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size())
  {
    auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == text.npos ? text.npos : end - pos);
    pos = end == text.npos ? text.size() : end + 1;
    line_no++;
    if (!line.empty() && line.back() == '\r')
    {
      line.remove_suffix(1);
    }
    if (line_no == 1)
    {
      for (auto f : SplitFields(line))
      {
        table.header.emplace_back(f);
      }
      table.columns.resize(table.header.size());
      continue;
    }
    if (line.empty())
    {
      continue;
    }
    const auto fields = SplitFields(line);
    if (fields.size() != table.header.size())
    {
      throw ParseError(line_no, 1,
                       "expected " + std::to_string(table.header.size()) + " fields, got " +
                           std::to_string(fields.size()));
    }
    std::size_t column = 1;
    for (std::size_t k = 0; k < fields.size(); k++)
    {
      table.columns[k].push_back(ParseField(fields[k], line_no, column));
      column += fields[k].size() + 1;
    }
  }
  if (line_no == 0)
  {
    throw ParseError(0, 0, "empty CSV input");
  }
  return table;
}

}  // namespace fode
