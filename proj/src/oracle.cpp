// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include "fode/errors.hpp"
#include "fode/fracops.hpp"
#include "fode/gamma.hpp"

namespace fode
{

namespace
{

bool IsPole(double x)
{
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

Trajectory gl_direct_solve(const ProblemSpec &p, const SolverConfig &cfg)
{
  cfg.Validate();
  ValidateProblem(p);
  if (!p.nonlinearity.IsAtMostLinear())
  {
    throw UnsupportedProblemError("GL oracle supports at most linear g(y)");
  }
  if (std::any_of(p.initial_conditions.begin(), p.initial_conditions.end(),
                  [](double b) { return b != 0.0; }))
  {
    throw UnsupportedProblemError("GL oracle supports homogeneous initial conditions only");
  }

  const double h = cfg.h;
  const std::size_t steps = cfg.Steps();
  const std::size_t nodes = steps + 1;

  struct Discretized
  {
    double scaled_coefficient;  // a_i h^{-alpha_i}
    WeightTable table;
  };
  std::vector<Discretized> terms;
  double pivot = p.nonlinearity.Coefficient(1);
  for (const auto &term : p.terms)
  {
    if (term.order == 0.0)
    {
      pivot += term.coefficient;
      continue;
    }
    WeightTable table(WeightTable::Kind::Grunwald, term.order, nodes);
    terms.push_back({term.coefficient * table.Scale(h), std::move(table)});
    pivot += terms.back().scaled_coefficient;
  }
  if (!std::isfinite(pivot) || std::abs(pivot) <= 1e-300)
  {
    throw SingularInversionError("GL oracle has a zero pivot");
  }
  const double constant = p.nonlinearity.Coefficient(0);

  std::vector<double> y(nodes, 0.0);
  std::optional<std::size_t> nan_node;
  for (std::size_t i = 1; i < nodes; i++)
  {
    double rhs = p.EvaluateForcing(static_cast<double>(i) * h) - constant;
    for (const auto &term : terms)
    {
      rhs -= term.scaled_coefficient * Convolve(term.table.weights(), y, i, 1);
    }
    y[i] = rhs / pivot;
    if (!std::isfinite(y[i]))
    {
      nan_node = i;
      y.resize(i);
      break;
    }
  }

  SampleSeries y_series(h, std::move(y));
  const double nu = IntegerOrderOf(p.terms.front().order) - p.terms.front().order;
  SampleSeries z1 = apply_operator(y_series, OperatorOrder(-nu));
  Trajectory out{h, steps, std::move(y_series), std::move(z1), std::nullopt, Diagnostics{}};
  out.diagnostics.nan_node = nan_node;
  return out;
}

double power_rule(double alpha, int p, double t, PowerRuleKind kind)
{
  if (p < 0)
  {
    throw DomainError("power rule needs p >= 0");
  }
  const double signed_alpha = kind == PowerRuleKind::Integral ? alpha : -alpha;
  const double exponent = p + signed_alpha;
  if (kind == PowerRuleKind::Derivative && !(exponent > -1.0))
  {
    throw DomainError("power rule derivative needs p - alpha > -1");
  }
  const double denominator_argument = exponent + 1.0;
  if (IsPole(denominator_argument))
  {
    return 0.0;
  }
  return gamma(p + 1.0) / gamma(denominator_argument) * std::pow(t, exponent);
}

double ManufacturedCase::Exact(double t) const
{
  return std::pow(t, power);
}

double ManufacturedCase::ExactDerivative(double t, int k) const
{
  if (k > power)
  {
    return 0.0;
  }
  double c = 1.0;
  for (int j = 0; j < k; j++)
  {
    c *= power - j;
  }
  return c * std::pow(t, power - k);
}

ManufacturedCase manufacture(const ProblemSpec &base, int p)
{
  if (base.terms.empty())
  {
    throw DomainError("no terms");
  }
  const int m1 = IntegerOrderOf(base.terms.front().order);
  if (p < m1)
  {
    throw DomainError("manufactured power must be at least m1 = " + std::to_string(m1));
  }
  ManufacturedCase out{p, base};
  out.problem.initial_conditions.assign(static_cast<std::size_t>(m1), 0.0);

  // Coefficients of t^{p - alpha_i}, fixed once.
  std::vector<std::pair<double, double>> parts;
  for (const auto &term : base.terms)
  {
    parts.emplace_back(term.coefficient * power_rule(term.order, p, 1.0, PowerRuleKind::Derivative),
                       p - term.order);
  }
  const Polynomial g = base.nonlinearity;
  out.problem.forcing = ExactForcing{
      [parts, g, p](double t)
      {
        double f = g(std::pow(t, p));
        for (const auto &[c, exponent] : parts)
        {
          if (c != 0.0)
          {
            f += c * std::pow(t, exponent);
          }
        }
        return f;
      },
      "manufactured forcing for y = t^" + std::to_string(p)};
  ValidateProblem(out.problem);
  return out;
}

}  // namespace fode
