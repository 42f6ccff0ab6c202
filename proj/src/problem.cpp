// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/problem.hpp"

#include <algorithm>
#include <cmath>
#include "fode/errors.hpp"
#include "fode/series.hpp"

namespace fode
{

namespace
{

bool NearBreakpoint(double t, double breakpoint)
{
  return std::isfinite(breakpoint) && std::abs(t - breakpoint) <= 1e-12 * std::max(1.0, std::abs(breakpoint));
}

double Horner(const std::vector<double> &c, double t)
{
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
  {
    s = s * t + *it;
  }
  return s;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<std::pair<const int, double>> terms)
{
  for (const auto &[p, c] : terms)
  {
    Add(p, c);
  }
}

void Polynomial::Add(int power, double coefficient)
{
  if (power < 0)
  {
    throw DomainError("nonlinearity powers must be non-negative");
  }
  coefficients_[power] += coefficient;
}

double Polynomial::operator()(double y) const
{
  double s = 0.0;
  for (const auto &[p, c] : coefficients_)
  {
    s += c * (p == 0 ? 1.0 : p == 1 ? y : std::pow(y, p));
  }
  return s;
}

double Polynomial::Coefficient(int power) const
{
  const auto it = coefficients_.find(power);
  return it == coefficients_.end() ? 0.0 : it->second;
}

bool Polynomial::IsAtMostLinear() const
{
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const auto &pc) { return pc.first <= 1 || pc.second == 0.0; });
}

PiecewiseForcing::PiecewiseForcing(std::vector<ForcingSegment> segments)
  : segments_(std::move(segments))
{
}

double PiecewiseForcing::operator()(double t) const
{
  if (segments_.empty())
  {
    return 0.0;
  }
  // Last segment whose start is <= t (breakpoints snap to the right).
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
  {
    if (t >= it->t_from || NearBreakpoint(t, it->t_from))
    {
      if (t < it->t_to && !NearBreakpoint(t, it->t_to))
      {
        return Horner(it->poly, t);
      }
      break;
    }
  }
  throw DomainError("forcing is not defined at t = " + std::to_string(t));
}

double PiecewiseForcing::CoverageEnd() const
{
  return segments_.empty() ? std::numeric_limits<double>::infinity() : segments_.back().t_to;
}

double ProblemSpec::EvaluateForcing(double t) const
{
  if (const auto *piecewise = std::get_if<PiecewiseForcing>(&forcing))
  {
    return (*piecewise)(t);
  }
  return std::get<ExactForcing>(forcing).f(t);
}

bool ProblemSpec::HasPiecewiseForcing() const
{
  return std::holds_alternative<PiecewiseForcing>(forcing);
}

bool operator==(const ProblemSpec &a, const ProblemSpec &b)
{
  if (!a.HasPiecewiseForcing() || !b.HasPiecewiseForcing())
  {
    return false;
  }
  return a.terms == b.terms && a.nonlinearity == b.nonlinearity &&
         std::get<PiecewiseForcing>(a.forcing) == std::get<PiecewiseForcing>(b.forcing) &&
         a.initial_conditions == b.initial_conditions;
}

int IntegerOrderOf(double alpha)
{
  return static_cast<int>(std::ceil(alpha));
}

void ValidateProblem(const ProblemSpec &p)
{
  if (p.terms.empty())
  {
    throw DomainError("no terms");
  }
  if (!std::isfinite(p.terms.front().coefficient) || p.terms.front().coefficient == 0.0)
  {
    throw DomainError("leading coefficient must be nonzero");
  }
  for (std::size_t i = 0; i < p.terms.size(); i++)
  {
    const auto &term = p.terms[i];
    if (!std::isfinite(term.coefficient) || !std::isfinite(term.order))
    {
      throw DomainError("term values must be finite");
    }
    if (term.order < 0.0)
    {
      throw DomainError("orders must be non-negative");
    }
    if (term.order >= OperatorOrder::kDefaultCap)
    {
      throw DomainError("order exceeds the supported cap");
    }
    if (i > 0 && !(p.terms[i - 1].order > term.order))
    {
      throw DomainError("orders must be strictly decreasing");
    }
  }
  for (const auto &[power, c] : p.nonlinearity.coefficients())
  {
    if (!std::isfinite(c))
    {
      throw DomainError("nonlinearity coefficients must be finite");
    }
  }
  const auto m1 = static_cast<std::size_t>(IntegerOrderOf(p.terms.front().order));
  if (p.initial_conditions.size() != m1)
  {
    throw DomainError("expected " + std::to_string(m1) + " initial conditions (k = 0.." +
                      std::to_string(m1 == 0 ? 0 : m1 - 1) + "), got " +
                      std::to_string(p.initial_conditions.size()));
  }
  for (double b : p.initial_conditions)
  {
    if (!std::isfinite(b))
    {
      throw DomainError("initial conditions must be finite");
    }
  }
  if (const auto *piecewise = std::get_if<PiecewiseForcing>(&p.forcing))
  {
    const auto &segments = piecewise->segments();
    for (std::size_t s = 0; s < segments.size(); s++)
    {
      const auto &seg = segments[s];
      if (!std::isfinite(seg.t_from) || std::isnan(seg.t_to) || !(seg.t_to > seg.t_from))
      {
        throw DomainError("forcing segment must satisfy t_from < t_to");
      }
      if (s == 0 && seg.t_from != 0.0)
      {
        throw DomainError("forcing segments must start at t = 0");
      }
      if (s > 0 && seg.t_from != segments[s - 1].t_to)
      {
        throw DomainError("forcing segments must be ordered and contiguous");
      }
      if (seg.poly.empty())
      {
        throw DomainError("forcing segment needs at least one coefficient");
      }
      for (double c : seg.poly)
      {
        if (!std::isfinite(c))
        {
          throw DomainError("forcing coefficients must be finite");
        }
      }
    }
  }
  else if (!std::get<ExactForcing>(p.forcing).f)
  {
    throw DomainError("exact forcing has no function");
  }
}

}  // namespace fode
