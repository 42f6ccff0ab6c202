// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_ORACLE_HPP
#define FODE_ORACLE_HPP

#include "fode/problem.hpp"
#include "fode/stepper.hpp"

namespace fode
{

// Reference solver independent of the decomposition: every D^{alpha_i} is
// discretized directly with Grunwald-Letnikov weights and the resulting
// scalar linear equation is solved for y_i at each node.
//
// Limited to g(y) = c0 + c1 y and homogeneous initial data; anything else
// raises UnsupportedProblemError. A zero pivot raises SingularInversionError.
// The returned z1 is I^{m1 - alpha1} y.
Trajectory gl_direct_solve(const ProblemSpec &p, const SolverConfig &cfg);

enum class PowerRuleKind
{
  Integral,
  Derivative
};

// Closed-form Riemann-Liouville action on t^p:
//   integral:   Gamma(p+1) / Gamma(p+1+alpha) t^{p+alpha}
//   derivative: Gamma(p+1) / Gamma(p+1-alpha) t^{p-alpha}   (p - alpha > -1)
// A gamma pole in the denominator gives an exact zero.
double power_rule(double alpha, int p, double t, PowerRuleKind kind);

// Problem whose exact solution is y*(t) = t^p.
struct ManufacturedCase
{
  int power = 0;
  ProblemSpec problem;

  double Exact(double t) const;
  // k-th classical derivative of t^p.
  double ExactDerivative(double t, int k) const;
};

// Replaces the forcing of `base` by f(t) = sum a_i D^{alpha_i} t^p + g(t^p),
// evaluated exactly at any node, and sets the (all-zero) initial data.
// Requires p >= m1.
ManufacturedCase manufacture(const ProblemSpec &base, int p);

}  // namespace fode

#endif  // FODE_ORACLE_HPP
