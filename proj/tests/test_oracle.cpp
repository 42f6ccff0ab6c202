// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <doctest.h>
#include "fode/benchmarks.hpp"
#include "fode/errors.hpp"
#include "fode/gamma.hpp"
#include "fode/oracle.hpp"

using namespace fode;

TEST_CASE("power_rule: closed forms")
{
  CHECK(power_rule(1.0, 1, 1.0, PowerRuleKind::Derivative) == doctest::Approx(1.0));
  CHECK(power_rule(0.5, 1, 1.0, PowerRuleKind::Derivative) ==
        doctest::Approx(1.12837916709551257).epsilon(1e-12));
  CHECK(power_rule(0.5, 1, 1.0, PowerRuleKind::Integral) ==
        doctest::Approx(0.752252778063675049).epsilon(1e-12));
  CHECK(power_rule(2.0, 2, 0.8, PowerRuleKind::Derivative) == doctest::Approx(2.0));
  CHECK_THROWS_AS(power_rule(2.0, 1, 0.8, PowerRuleKind::Derivative), DomainError);
  CHECK_THROWS_AS(power_rule(1.5, 0, 1.0, PowerRuleKind::Derivative), DomainError);
  CHECK_THROWS_AS(power_rule(0.5, -1, 1.0, PowerRuleKind::Integral), DomainError);
}

TEST_CASE("manufacture: forcing matches the power rule")
{
  const auto one = manufacture(OneTermHalfOrder(), 2);
  const auto f = [&](double t) { return one.problem.EvaluateForcing(t); };
  for (double t : {0.0, 0.3, 1.0, 2.5})
  {
    const double expected = fode::gamma(3.0) / fode::gamma(2.5) * std::pow(t, 1.5) + t * t;
    CHECK(f(t) == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(one.problem.initial_conditions == std::vector<double>{0.0});

  ProblemSpec two;
  two.terms = {{1.0, 1.5}, {1.0, 0.5}};
  two.initial_conditions = {0.0, 0.0};
  const auto mc = manufacture(two, 2);
  const double t = 0.64;
  CHECK(mc.problem.EvaluateForcing(t) ==
        doctest::Approx(fode::gamma(3.0) / fode::gamma(1.5) * std::pow(t, 0.5) +
                        fode::gamma(3.0) / fode::gamma(2.5) * std::pow(t, 1.5))
            .epsilon(1e-13));
  CHECK(mc.problem.initial_conditions == std::vector<double>{0.0, 0.0});
  CHECK_THROWS_AS(manufacture(two, 1), DomainError);
}

TEST_CASE("gl_direct_solve: zero forcing")
{
  auto p = BagleyTorvik();
  p.forcing = PiecewiseForcing{};
  const auto traj = gl_direct_solve(p, {0.01, 5.0});
  for (double v : traj.y.values())
  {
    CHECK(v == 0.0);
  }
}

TEST_CASE("gl_direct_solve: manufactured solutions converge")
{
  for (const auto &base : {OneTermHalfOrder(), TwoTermIndependent()})
  {
    const auto mc = manufacture(base, 2);
    double previous = 0.0;
    for (double h : {2e-3, 1e-3})
    {
      const auto traj = gl_direct_solve(mc.problem, {h, 1.0});
      double e = 0.0;
      for (std::size_t i = 0; i < traj.y.size(); i++)
      {
        e = std::max(e, std::abs(traj.y[i] - mc.Exact(traj.y.time(i))));
      }
      if (h == 1e-3)
      {
        CHECK(e <= 1e-2);
      }
      if (previous > 0.0)
      {
        CHECK(previous / e >= 1.5);
      }
      previous = e;
    }
  }
}

TEST_CASE("gl_direct_solve: unsupported problems")
{
  CHECK_THROWS_AS(gl_direct_solve(BagleyTorvik(3), {0.01, 1.0}), UnsupportedProblemError);
  auto p = BagleyTorvik();
  p.initial_conditions = {1.0, 0.0};
  CHECK_THROWS_AS(gl_direct_solve(p, {0.01, 1.0}), UnsupportedProblemError);
}

TEST_CASE("gl_direct_solve and the decomposition converge to each other")
{
  const auto p = BagleyTorvik();
  double previous = 0.0;
  for (double h : {0.02, 0.01, 0.005})
  {
    const auto a = gl_direct_solve(p, {h, 10.0});
    const auto b = solve(p, {h, 10.0});
    double d = 0.0;
    for (std::size_t i = 0; i < a.y.size(); i++)
    {
      d = std::max(d, std::abs(a.y[i] - b.y[i]));
    }
    if (previous > 0.0)
    {
      CHECK(previous / d >= 1.5);
    }
    previous = d;
  }
}
