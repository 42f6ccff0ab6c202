// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/benchmarks.hpp"

namespace fode
{

ProblemSpec BagleyTorvik(int power, double c)
{
  ProblemSpec p;
  p.terms = {{1.0, 2.0}, {0.5, 1.5}};
  p.nonlinearity.Add(power, c);
  p.forcing = PiecewiseForcing({{0.0, 1.0, {8.0}}, {1.0, std::numeric_limits<double>::infinity(), {0.0}}});
  p.initial_conditions = {0.0, 0.0};
  return p;
}

ProblemSpec OneTermHalfOrder()
{
  ProblemSpec p;
  p.terms = {{1.0, 0.5}};
  p.nonlinearity.Add(1, 1.0);
  p.initial_conditions = {0.0};
  return p;
}

ProblemSpec TwoTermIndependent()
{
  ProblemSpec p;
  p.terms = {{1.0, 1.7}, {1.0, 0.3}};
  p.nonlinearity.Add(1, 1.0);
  p.initial_conditions = {0.0, 0.0};
  return p;
}

}  // namespace fode
