// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/series.hpp"

#include <cmath>
#include <string>
#include "fode/errors.hpp"

namespace fode
{

SampleSeries::SampleSeries(double h, std::vector<double> values) : h_(h), values_(std::move(values))
{
  if (!(h_ > 0.0) || !std::isfinite(h_))
  {
    throw DomainError("SampleSeries: step must be positive and finite");
  }
  if (values_.empty())
  {
    throw DomainError("SampleSeries: at least one sample (t = 0) is required");
  }
}

SampleSeries SampleSeries::Sample(double h, std::size_t nodes,
                                  const std::function<double(double)> &f)
{
  std::vector<double> values(nodes);
  for (std::size_t i = 0; i < nodes; i++)
  {
    values[i] = f(static_cast<double>(i) * h);
  }
  return {h, std::move(values)};
}

void RequireSameStep(const SampleSeries &a, const SampleSeries &b)
{
  if (a.step() != b.step())
  {
    throw DomainError("series combined in one computation must share the grid step");
  }
}

OperatorOrder::OperatorOrder(double mu, double cap) : mu_(mu)
{
  if (!std::isfinite(mu))
  {
    throw DomainError("operator order must be finite");
  }
  if (std::abs(mu) >= cap)
  {
    throw DomainError("operator order " + std::to_string(mu) + " exceeds the cap " +
                      std::to_string(cap));
  }
}

}  // namespace fode
