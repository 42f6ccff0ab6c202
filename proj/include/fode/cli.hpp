// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_CLI_HPP
#define FODE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fode::cli
{

// Stable process exit codes.
enum ExitCode : int
{
  kSuccess = 0,
  kUsage = 1,
  kInput = 2,
  kNumerical = 3
};

struct SolveOptions
{
  std::string problem;
  double step = 0.0;
  double t_end = 0.0;
  std::string inversion = "direct";  // direct | babenko
  int babenko_terms = 30;
  bool write_z1 = false;
  bool write_derivatives = false;
  // > 0: replace the forcing so that y = t^manufactured is exact.
  int manufactured = 0;
  std::string out;  // empty or "-" writes to stdout
};

struct ConvergenceOptions
{
  std::string problem;
  std::vector<double> steps;
  double t_end = 0.0;
  std::string inversion = "direct";
  int babenko_terms = 30;
  std::string oracle = "self";  // self | gl | exact (exact needs manufactured)
  int manufactured = 0;
  std::string out;
};

struct ApplyOptions
{
  std::string input;
  double order = 0.0;
  std::string out;
};

struct VerifyCommandOptions
{
  bool json = false;
  // Test hook: run the suite against a deliberately wrong gamma.
  bool inject_gamma_fault = false;
};

// Each command writes its CSV/report to the requested destination (`out` is
// the stdout stand-in) and diagnostics to `err`, and returns an ExitCode.
int run_solve(const SolveOptions &options, std::ostream &out, std::ostream &err);
int run_convergence(const ConvergenceOptions &options, std::ostream &out, std::ostream &err);
int run_apply(const ApplyOptions &options, std::ostream &out, std::ostream &err);
int run_verify(const VerifyCommandOptions &options, std::ostream &out, std::ostream &err);

}  // namespace fode::cli

#endif  // FODE_CLI_HPP
