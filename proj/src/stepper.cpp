// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/stepper.hpp"

#include <cmath>
#include <string>
#include "fode/errors.hpp"
#include "fode/fracops.hpp"

namespace fode
{

std::size_t SolverConfig::Steps() const
{
  const double ratio = t_end / h;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest))
  {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::floor(ratio));
}

void SolverConfig::Validate() const
{
  if (!(h > 0.0) || !std::isfinite(h))
  {
    throw DomainError("step must be positive and finite");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end))
  {
    throw DomainError("end time must be positive and finite");
  }
  if (Steps() < 2)
  {
    throw DomainError("end time must cover at least two steps");
  }
  if (const auto *babenko = std::get_if<BabenkoInversion>(&inversion); babenko && babenko->terms < 1)
  {
    throw DomainError("Babenko inversion needs at least one term");
  }
}

double InitialDataPolynomial(std::span<const double> ics, double t, std::size_t derivative)
{
  // sum_{j >= d} b_j t^{j-d} / (j-d)! in Horner form.
  double s = 0.0;
  for (std::size_t j = ics.size(); j-- > derivative;)
  {
    s = s * t / static_cast<double>(j - derivative + 1) + ics[j];
  }
  return s;
}

double reconstruct_y(const SampleSeries &z1, std::span<const double> ics, double nu,
                     std::size_t i)
{
  if (!(nu >= 0.0 && nu < 1.0))
  {
    throw DomainError("reconstruction order must lie in [0, 1)");
  }
  const double poly = InitialDataPolynomial(ics, z1.time(i));
  return poly + (nu == 0.0 ? z1[i] : frac_derivative01(z1, nu, i));
}

std::vector<SampleSeries> reconstruct_derivatives(const SampleSeries &z1,
                                                  std::span<const double> ics, double alpha1,
                                                  int m1)
{
  const double nu = static_cast<double>(m1) - alpha1;
  std::vector<SampleSeries> out;
  for (int k = 1; k < m1; k++)
  {
    const auto op = apply_operator(z1, OperatorOrder(nu + k));
    std::vector<double> values(z1.size());
    for (std::size_t i = 0; i < z1.size(); i++)
    {
      values[i] = InitialDataPolynomial(ics, z1.time(i), static_cast<std::size_t>(k)) + op[i];
    }
    out.emplace_back(z1.step(), std::move(values));
  }
  return out;
}

Trajectory solve(const ProblemSpec &p, const SolverConfig &cfg)
{
  cfg.Validate();
  const DecomposedSystem sys = build(p, cfg.inversion);
  const double h = cfg.h;
  const std::size_t steps = cfg.Steps();
  const std::size_t nodes = steps + 1;
  const bool dependent = !sys.w_links.empty();

  std::vector<NodeOperator> links;
  links.reserve(sys.rhs_links.size());
  for (const auto &link : sys.rhs_links)
  {
    links.emplace_back(OperatorOrder(link.effective_order), h, nodes);
  }
  const NodeOperator reconstruct(OperatorOrder(sys.reconstruction_order), h, nodes);

  std::optional<VolterraInverter> direct;
  std::optional<BabenkoInverter> babenko;
  if (dependent)
  {
    if (const auto *b = std::get_if<BabenkoInversion>(&sys.inversion))
    {
      const auto &link = sys.w_links.front();
      babenko.emplace(link.ratio, link.integral_order, b->terms, h, nodes);
    }
    else
    {
      direct.emplace(sys.w_links, h, nodes);
    }
  }

  std::vector<double> z1(nodes, 0.0);
  std::vector<double> w(dependent ? nodes : 0, 0.0);
  std::vector<double> y(nodes, 0.0);
  std::vector<double> u(static_cast<std::size_t>(sys.m1), 0.0);
  double babenko_tail = 0.0;
  std::optional<std::size_t> nan_node;
  std::size_t filled = nodes;

  for (std::size_t i = 0; i < nodes; i++)
  {
    const double t = static_cast<double>(i) * h;
    if (dependent)
    {
      w[i] = u[0];
      if (babenko)
      {
        const auto node = (*babenko)(w, i);
        z1[i] = node.value;
        babenko_tail = std::max(babenko_tail, node.last_term);
      }
      else
      {
        z1[i] = (*direct)(w[i], z1, i);
      }
    }
    else
    {
      z1[i] = u[0];
    }
    y[i] = InitialDataPolynomial(sys.ic_poly, t) + reconstruct(z1, i);
    if (!std::isfinite(y[i]) || !std::isfinite(z1[i]))
    {
      nan_node = i;
      filled = i;
      break;
    }
    if (i + 1 == nodes)
    {
      break;
    }

    double rhs = p.EvaluateForcing(t) - p.nonlinearity(y[i]);
    for (std::size_t k = 0; k < links.size(); k++)
    {
      rhs -= sys.rhs_links[k].coefficient * links[k](z1, i);
    }
    rhs /= sys.a1;

    u.back() += h * rhs;
    for (std::size_t k = u.size() - 1; k-- > 0;)
    {
      u[k] += h * u[k + 1];
    }
    bool finite = true;
    for (double v : u)
    {
      finite = finite && std::isfinite(v);
    }
    if (!finite)
    {
      nan_node = i + 1;
      filled = i + 1;
      break;
    }
  }

  z1.resize(filled);
  y.resize(filled);
  Trajectory out{h, steps, SampleSeries(h, std::move(y)), SampleSeries(h, std::move(z1)),
                 std::nullopt, Diagnostics{}};
  out.diagnostics.nan_node = nan_node;
  if (babenko)
  {
    out.diagnostics.babenko_tail = babenko_tail;
  }
  if (cfg.output_derivatives)
  {
    out.y_derivs = reconstruct_derivatives(out.z1, sys.ic_poly, sys.alpha1, sys.m1);
  }
  return out;
}

}  // namespace fode
