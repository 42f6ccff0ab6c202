// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/fracops.hpp"

#include <cmath>
#include <string>
#include "fode/errors.hpp"
#include "fode/gamma.hpp"

namespace fode
{

namespace
{

constexpr std::size_t kPairwiseBlock = 32;

// Sum of term(j) for j in [lo, hi), pairwise above the block size.
template <typename Term>
double PairwiseSum(std::size_t lo, std::size_t hi, const Term &term)
{
  if (hi - lo <= kPairwiseBlock)
  {
    double s = 0.0;
    for (std::size_t j = lo; j < hi; j++)
    {
      s += term(j);
    }
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return PairwiseSum(lo, mid, term) + PairwiseSum(mid, hi, term);
}

// (j+1)^p - (j-1)^p for j >= 1.
double CentralPowerDifference(double j, double p)
{
  if (j < 2.0)
  {
    return std::pow(j + 1.0, p) - std::pow(j - 1.0, p);
  }
  const double x = 1.0 / j;
  return std::pow(j, p) * (std::expm1(p * std::log1p(x)) - std::expm1(p * std::log1p(-x)));
}

// (j+1)^p - j^p for j >= 0.
double ForwardPowerDifference(double j, double p)
{
  if (j < 1.0)
  {
    return std::pow(j + 1.0, p) - std::pow(j, p);
  }
  return std::pow(j, p) * std::expm1(p * std::log1p(1.0 / j));
}

void CheckTable(const WeightTable &table, WeightTable::Kind kind, std::size_t i)
{
  if (table.kind() != kind)
  {
    throw DomainError("weight table kind does not match the operator");
  }
  if (i >= table.nodes())
  {
    throw DomainError("weight table too short for node " + std::to_string(i));
  }
}

void CheckNode(std::span<const double> z, std::size_t i)
{
  if (i >= z.size())
  {
    throw DomainError("node index " + std::to_string(i) + " outside the series");
  }
}

}  // namespace

WeightTable::WeightTable(Kind kind, double order, std::size_t nodes)
  : kind_(kind), order_(order), weights_(nodes, 0.0)
{
  if (nodes == 0)
  {
    throw DomainError("weight table needs at least one node");
  }
  switch (kind)
  {
    case Kind::Integral:
      if (!(order > 0.0))
      {
        throw DomainError("integral order must be positive");
      }
      gamma_factor_ = gamma(1.0 + order);
      boundary_.assign(nodes, 0.0);
      weights_[0] = 1.0;
      for (std::size_t j = 1; j < nodes; j++)
      {
        const double jd = static_cast<double>(j);
        weights_[j] = CentralPowerDifference(jd, order);
        boundary_[j] = ForwardPowerDifference(jd - 1.0, order);
      }
      break;
    case Kind::Derivative01:
      if (!(order >= 0.0 && order < 1.0))
      {
        throw DomainError("derivative order must lie in [0, 1) for this scheme");
      }
      gamma_factor_ = gamma(2.0 - order);
      for (std::size_t j = 0; j < nodes; j++)
      {
        weights_[j] = ForwardPowerDifference(static_cast<double>(j), 1.0 - order);
      }
      break;
    case Kind::Grunwald:
      if (!(order > 0.0))
      {
        throw DomainError("Grunwald-Letnikov order must be positive");
      }
      gamma_factor_ = 1.0;
      weights_[0] = 1.0;
      for (std::size_t j = 1; j < nodes; j++)
      {
        weights_[j] = weights_[j - 1] * (1.0 - (order + 1.0) / static_cast<double>(j));
      }
      break;
  }
}

double WeightTable::Scale(double h) const
{
  switch (kind_)
  {
    case Kind::Integral:
      return std::pow(h, order_) / (2.0 * gamma_factor_);
    case Kind::Derivative01:
      return std::pow(h, -order_) / gamma_factor_;
    case Kind::Grunwald:
      return std::pow(h, -order_);
  }
  return 0.0;
}

double integral_history_sum(std::span<const double> z, const WeightTable &table, std::size_t i)
{
  CheckTable(table, WeightTable::Kind::Integral, i);
  CheckNode(z, i);
  if (i == 0)
  {
    return 0.0;
  }
  const auto w = table.weights();
  const double tail = PairwiseSum(1, i, [&](std::size_t j) { return w[j] * z[i - j]; });
  return z[0] * table.boundary()[i] + tail;
}

double frac_integral(std::span<const double> z, double h, const WeightTable &table,
                     std::size_t i)
{
  if (i == 0)
  {
    CheckNode(z, i);
    return 0.0;
  }
  const double history = integral_history_sum(z, table, i);
  return table.Scale(h) * (history + z[i]);
}

double frac_derivative01(std::span<const double> z, double h, const WeightTable &table,
                         std::size_t i)
{
  CheckTable(table, WeightTable::Kind::Derivative01, i);
  CheckNode(z, i);
  const double alpha = table.order();
  if (i == 0)
  {
    if (z[0] != 0.0)
    {
      throw SingularOriginError(
          "derivative of order in (0,1) is singular at t = 0 when z(0) != 0");
    }
    return 0.0;
  }
  if (alpha == 0.0)
  {
    return z[i];
  }
  const auto c = table.weights();
  const double sum =
      PairwiseSum(0, i, [&](std::size_t j) { return (z[i - j] - z[i - j - 1]) * c[j]; });
  const double origin = (1.0 - alpha) * z[0] / std::pow(static_cast<double>(i), alpha);
  return table.Scale(h) * (origin + sum);
}

double frac_derivative_general(std::span<const double> z, double h, const WeightTable &table,
                               std::size_t i)
{
  CheckTable(table, WeightTable::Kind::Grunwald, i);
  CheckNode(z, i);
  if (z[0] != 0.0)
  {
    throw PreconditionError(
        "Grunwald-Letnikov derivative requires z(0) = 0 to agree with Riemann-Liouville");
  }
  const auto w = table.weights();
  return table.Scale(h) * PairwiseSum(0, i + 1, [&](std::size_t j) { return w[j] * z[i - j]; });
}

double frac_integral(const SampleSeries &z, double alpha, std::size_t i)
{
  if (!(alpha > 0.0))
  {
    throw DomainError("integral order must be positive");
  }
  CheckNode(z.values(), i);
  const WeightTable table(WeightTable::Kind::Integral, alpha, i + 1);
  return frac_integral(z.values(), z.step(), table, i);
}

double frac_derivative01(const SampleSeries &z, double alpha, std::size_t i)
{
  CheckNode(z.values(), i);
  const WeightTable table(WeightTable::Kind::Derivative01, alpha, i + 1);
  return frac_derivative01(z.values(), z.step(), table, i);
}

double frac_derivative_general(const SampleSeries &z, double alpha, std::size_t i)
{
  if (!(alpha >= 1.0))
  {
    throw DomainError("general derivative expects order >= 1");
  }
  CheckNode(z.values(), i);
  const WeightTable table(WeightTable::Kind::Grunwald, alpha, i + 1);
  return frac_derivative_general(z.values(), z.step(), table, i);
}

NodeOperator::NodeOperator(OperatorOrder mu, double h, std::size_t nodes)
  : mu_(mu.value()), h_(h)
{
  if (mu.is_identity())
  {
    return;
  }
  if (mu.is_integral())
  {
    table_.emplace(WeightTable::Kind::Integral, mu.magnitude(), nodes);
  }
  else if (mu_ < 1.0)
  {
    table_.emplace(WeightTable::Kind::Derivative01, mu_, nodes);
  }
  else
  {
    table_.emplace(WeightTable::Kind::Grunwald, mu_, nodes);
  }
}

double NodeOperator::operator()(std::span<const double> z, std::size_t i) const
{
  if (!table_)
  {
    CheckNode(z, i);
    return z[i];
  }
  switch (table_->kind())
  {
    case WeightTable::Kind::Integral:
      return frac_integral(z, h_, *table_, i);
    case WeightTable::Kind::Derivative01:
      return frac_derivative01(z, h_, *table_, i);
    case WeightTable::Kind::Grunwald:
      return frac_derivative_general(z, h_, *table_, i);
  }
  return 0.0;
}

SampleSeries apply_operator(const SampleSeries &z, OperatorOrder mu)
{
  if (mu.is_identity())
  {
    return z;
  }
  const NodeOperator op(mu, z.step(), z.size());
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); i++)
  {
    out[i] = op(z.values(), i);
  }
  return {z.step(), std::move(out)};
}

double Convolve(std::span<const double> weights, std::span<const double> z, std::size_t i,
                std::size_t first)
{
  if (i >= z.size() || i >= weights.size())
  {
    throw DomainError("Convolve: node index outside the data");
  }
  if (first > i)
  {
    return 0.0;
  }
  return PairwiseSum(first, i + 1, [&](std::size_t j) { return weights[j] * z[i - j]; });
}

}  // namespace fode
