// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_STEPPER_HPP
#define FODE_STEPPER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>
#include "fode/decompose.hpp"
#include "fode/problem.hpp"
#include "fode/series.hpp"

namespace fode
{

struct SolverConfig
{
  double h = 0.01;
  double t_end = 1.0;
  InversionMethod inversion = DirectVolterraInversion{};
  bool output_derivatives = false;

  // Number of steps N = floor(T / h); a ratio within 1e-9 of an integer is
  // rounded to it so that e.g. 30 / 0.01 gives 3000.
  std::size_t Steps() const;
  // Throws DomainError unless h, T are positive finite and N >= 2.
  void Validate() const;
};

struct Diagnostics
{
  std::optional<double> babenko_tail;
  // First node whose state was not finite; the series stop before it.
  std::optional<std::size_t> nan_node;
};

struct Trajectory
{
  double h = 0.0;
  std::size_t steps = 0;
  SampleSeries y;
  SampleSeries z1;
  // y^(1) .. y^(m1-1) when requested.
  std::optional<std::vector<SampleSeries>> y_derivs;
  Diagnostics diagnostics;

  bool ok() const noexcept { return !diagnostics.nan_node.has_value(); }
};

// Explicit Euler integration of the decomposed system on [0, N h].
//
// The integer-order state u = (s, s', ..., s^(m1-1)) starts at zero, with s
// the temporary function z1 (or w for dependent problems). At node i the
// solver recovers z1_i (from w_i when dependent), reconstructs
// y_i = sum_k b_k t^k / k! + (D^nu z1)_i, evaluates
//   RHS_i = (f(t_i) - sum a_k (D^{mu_k} z1)_i - g(y_i)) / a1
// from history through node i, and advances the state in place from the top
// component down: u_{m1-1} += h RHS_i, then u_k += h u_{k+1}.
Trajectory solve(const ProblemSpec &p, const SolverConfig &cfg);

// y_i = sum_k b_k t_i^k / k! + (D^nu z1)_i, 0 <= nu < 1.
double reconstruct_y(const SampleSeries &z1, std::span<const double> ics, double nu,
                     std::size_t i);

// y^(k) for k = 1..m1-1: sum_{j>=k} b_j t^{j-k} / (j-k)! + D^{nu+k} z1.
std::vector<SampleSeries> reconstruct_derivatives(const SampleSeries &z1,
                                                  std::span<const double> ics, double alpha1,
                                                  int m1);

// Taylor polynomial of the initial data and its derivatives at t.
double InitialDataPolynomial(std::span<const double> ics, double t, std::size_t derivative = 0);

}  // namespace fode

#endif  // FODE_STEPPER_HPP
