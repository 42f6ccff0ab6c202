// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_PROBLEM_IO_HPP
#define FODE_PROBLEM_IO_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>
#include "fode/problem.hpp"

namespace fode
{

// Line-oriented problem description (UTF-8, '#' starts a comment):
//
//   term <coefficient> <order>               orders strictly decreasing
//   nonlinear <power> <coefficient>          g(y) += coefficient * y^power
//   forcing <t_from> <t_to|inf> <c0> [c1 ...] f(t) = sum c_k t^k on [t_from, t_to)
//   init <k> <value>                          y^(k)(0), required for k = 0..m1-1
//
// Numbers use '.' as decimal separator regardless of locale.
struct ProblemFile
{
  std::string path;
  ProblemSpec spec;
  // 1-based source lines of each directive, in file order.
  std::vector<std::size_t> term_lines;
  std::vector<std::size_t> forcing_lines;
  std::map<int, std::size_t> nonlinear_lines;
  std::map<int, std::size_t> init_lines;
};

// Throws ParseError carrying line and column (line 0 for whole-file errors
// such as "no terms" or a missing init entry).
ProblemFile parse_problem_file(std::string_view text, std::string path = {});
ProblemSpec parse_problem(std::string_view text);

// Reads and parses a file; an unreadable file is a ParseError at line 0.
ProblemFile load_problem(const std::string &path);

// Canonical text form; parse_problem(print_problem(p)) == p for every valid
// problem with piecewise forcing.
std::string print_problem(const ProblemSpec &p);

}  // namespace fode

#endif  // FODE_PROBLEM_IO_HPP
