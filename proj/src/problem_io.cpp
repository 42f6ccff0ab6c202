// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include "fode/csv.hpp"
#include "fode/errors.hpp"

namespace fode
{

namespace
{

struct Token
{
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line)
{
  if (const auto hash = line.find('#'); hash != line.npos)
  {
    line = line.substr(0, hash);
  }
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size())
  {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
    {
      i++;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
    {
      i++;
    }
    if (i > start)
    {
      tokens.push_back({line.substr(start, i - start), start + 1});
    }
  }
  return tokens;
}

class LineParser
{
public:
  LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens))
  {
  }

  std::string_view keyword() const { return tokens_.front().text; }
  std::size_t count() const { return tokens_.size(); }
  std::size_t column(std::size_t k) const
  {
    return k < tokens_.size() ? tokens_[k].column : EndColumn();
  }

  void RequireCount(std::size_t min, std::size_t max, const char *usage) const
  {
    if (tokens_.size() < min || tokens_.size() > max)
    {
      const std::size_t k = tokens_.size() < min ? tokens_.size() : max;
      throw ParseError(line_, column(k), std::string("expected '") + usage + "'");
    }
  }

  double Real(std::size_t k, bool allow_inf = false) const
  {
    const auto text = tokens_[k].text;
    if (allow_inf && text == "inf")
    {
      return std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    if (*first == '+')
    {
      first++;
    }
    const auto r = std::from_chars(first, last, v);
    if (r.ec != std::errc() || r.ptr != last || !std::isfinite(v))
    {
      throw ParseError(line_, tokens_[k].column,
                       "expected a finite number, got '" + std::string(text) + "'");
    }
    return v;
  }

  int Integer(std::size_t k) const
  {
    const auto text = tokens_[k].text;
    int v = 0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size() || v < 0)
    {
      throw ParseError(line_, tokens_[k].column,
                       "expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
  }

  [[noreturn]] void Fail(std::size_t k, const std::string &message) const
  {
    throw ParseError(line_, column(k), message);
  }

private:
  std::size_t EndColumn() const
  {
    return tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
  }

  std::size_t line_;
  std::vector<Token> tokens_;
};

}  // namespace

ProblemFile parse_problem_file(std::string_view text, std::string path)
{
  ProblemFile file;
  file.path = std::move(path);
  ProblemSpec &spec = file.spec;
  std::vector<ForcingSegment> segments;
  std::map<int, double> inits;
  std::vector<std::size_t> order_columns;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size())
  {
    const auto end = text.find('\n', pos);
    const auto raw = text.substr(pos, end == text.npos ? text.npos : end - pos);
    pos = end == text.npos ? text.size() : end + 1;
    line_no++;
    auto tokens = Tokenize(raw);
    if (tokens.empty())
    {
      continue;
    }
    const LineParser line(line_no, std::move(tokens));
    const auto keyword = line.keyword();
    if (keyword == "term")
    {
      line.RequireCount(3, 3, "term <coefficient> <order>");
      const FracTerm term{line.Real(1), line.Real(2)};
      if (term.order < 0.0)
      {
        line.Fail(2, "orders must be non-negative");
      }
      if (spec.terms.empty() && term.coefficient == 0.0)
      {
        line.Fail(1, "leading coefficient must be nonzero");
      }
      if (!spec.terms.empty() && !(spec.terms.back().order > term.order))
      {
        line.Fail(2, "orders must be strictly decreasing");
      }
      spec.terms.push_back(term);
      file.term_lines.push_back(line_no);
    }
    else if (keyword == "nonlinear")
    {
      line.RequireCount(3, 3, "nonlinear <power> <coefficient>");
      const int power = line.Integer(1);
      spec.nonlinearity.Add(power, line.Real(2));
      file.nonlinear_lines.emplace(power, line_no);
    }
    else if (keyword == "forcing")
    {
      line.RequireCount(4, std::numeric_limits<std::size_t>::max(),
                        "forcing <t_from> <t_to|inf> <c0> [c1 ...]");
      ForcingSegment seg;
      seg.t_from = line.Real(1);
      seg.t_to = line.Real(2, true);
      for (std::size_t k = 3; k < line.count(); k++)
      {
        seg.poly.push_back(line.Real(k));
      }
      if (!(seg.t_to > seg.t_from))
      {
        line.Fail(2, "forcing segment must satisfy t_from < t_to");
      }
      if (segments.empty() && seg.t_from != 0.0)
      {
        line.Fail(1, "forcing segments must start at t = 0");
      }
      if (!segments.empty() && seg.t_from != segments.back().t_to)
      {
        line.Fail(1, "forcing segments must be ordered and contiguous");
      }
      segments.push_back(std::move(seg));
      file.forcing_lines.push_back(line_no);
    }
    else if (keyword == "init")
    {
      line.RequireCount(3, 3, "init <k> <value>");
      const int k = line.Integer(1);
      if (inits.count(k))
      {
        line.Fail(1, "duplicate init " + std::to_string(k));
      }
      inits[k] = line.Real(2);
      file.init_lines[k] = line_no;
    }
    else
    {
      line.Fail(0, "unknown directive '" + std::string(keyword) + "'");
    }
  }

  if (spec.terms.empty())
  {
    throw ParseError(0, 0, "no terms");
  }
  spec.forcing = PiecewiseForcing(std::move(segments));
  const int m1 = IntegerOrderOf(spec.terms.front().order);
  for (const auto &[k, value] : inits)
  {
    if (k >= m1)
    {
      throw ParseError(file.init_lines[k], 1,
                       "init " + std::to_string(k) + " exceeds m1 - 1 = " + std::to_string(m1 - 1));
    }
  }
  for (int k = 0; k < m1; k++)
  {
    const auto it = inits.find(k);
    if (it == inits.end())
    {
      throw ParseError(0, 0, "missing init " + std::to_string(k) + " (m1 = " +
                                 std::to_string(m1) + " requires k = 0.." +
                                 std::to_string(m1 - 1) + ")");
    }
    spec.initial_conditions.push_back(it->second);
  }
  try
  {
    ValidateProblem(spec);
  }
  catch (const DomainError &e)
  {
    throw ParseError(0, 0, e.what());
  }
  return file;
}

ProblemSpec parse_problem(std::string_view text)
{
  return parse_problem_file(text).spec;
}

ProblemFile load_problem(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError(0, 0, "cannot open problem file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_file(ss.str(), path);
}

std::string print_problem(const ProblemSpec &p)
{
  const auto *forcing = std::get_if<PiecewiseForcing>(&p.forcing);
  if (!forcing)
  {
    throw DomainError("exact forcing has no text form");
  }
  std::ostringstream os;
  for (const auto &term : p.terms)
  {
    os << "term " << FormatNumber(term.coefficient) << ' ' << FormatNumber(term.order) << '\n';
  }
  for (const auto &[power, c] : p.nonlinearity.coefficients())
  {
    os << "nonlinear " << power << ' ' << FormatNumber(c) << '\n';
  }
  for (const auto &seg : forcing->segments())
  {
    os << "forcing " << FormatNumber(seg.t_from) << ' ' << FormatNumber(seg.t_to);
    for (double c : seg.poly)
    {
      os << ' ' << FormatNumber(c);
    }
    os << '\n';
  }
  for (std::size_t k = 0; k < p.initial_conditions.size(); k++)
  {
    os << "init " << k << ' ' << FormatNumber(p.initial_conditions[k]) << '\n';
  }
  return os.str();
}

}  // namespace fode
