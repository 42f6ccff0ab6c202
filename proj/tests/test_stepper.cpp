// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <doctest.h>
#include "fode/benchmarks.hpp"
#include "fode/errors.hpp"
#include "fode/oracle.hpp"
#include "fode/stepper.hpp"

using namespace fode;

namespace
{

double SupError(const SampleSeries &y, const std::function<double(double)> &exact)
{
  double e = 0.0;
  for (std::size_t i = 0; i < y.size(); i++)
  {
    e = std::max(e, std::abs(y[i] - exact(y.time(i))));
  }
  return e;
}

}  // namespace

TEST_CASE("SolverConfig: step counting and validation")
{
  CHECK(SolverConfig{0.01, 30.0}.Steps() == 3000);
  CHECK(SolverConfig{0.1, 0.3}.Steps() == 3);
  CHECK(SolverConfig{0.4, 1.0}.Steps() == 2);
  CHECK_THROWS_AS(SolverConfig({-1.0, 1.0}).Validate(), DomainError);
  CHECK_THROWS_AS(SolverConfig({0.1, 0.0}).Validate(), DomainError);
  CHECK_THROWS_AS(SolverConfig({0.6, 1.0}).Validate(), DomainError);
}

TEST_CASE("solve: zero forcing and zero data give y = 0")
{
  for (auto p : {BagleyTorvik(), TwoTermIndependent(), OneTermHalfOrder(), BagleyTorvik(3)})
  {
    p.forcing = PiecewiseForcing{};
    const auto traj = solve(p, {0.05, 2.0});
    CHECK(traj.ok());
    for (double v : traj.y.values())
    {
      CHECK(v == 0.0);
    }
  }
}

TEST_CASE("solve: grid size and origin invariants")
{
  auto p = BagleyTorvik();
  p.initial_conditions = {0.25, -1.0};
  const auto traj = solve(p, {0.01, 30.0, DirectVolterraInversion{}, true});
  CHECK(traj.y.size() == 3001);
  CHECK(traj.steps == 3000);
  CHECK(traj.y[0] == 0.25);
  CHECK(traj.z1[0] == 0.0);
  REQUIRE(traj.y_derivs);
  REQUIRE(traj.y_derivs->size() == 1);
  CHECK((*traj.y_derivs)[0][0] == -1.0);
}

TEST_CASE("solve: discrete derivative at the origin approaches b1")
{
  auto p = BagleyTorvik();
  p.initial_conditions = {0.0, 1.5};
  double previous = std::numeric_limits<double>::infinity();
  for (double h : {0.02, 0.01, 0.005})
  {
    const auto traj = solve(p, {h, 1.0});
    const double slope = (traj.y[1] - traj.y[0]) / h;
    const double gap = std::abs(slope - 1.5);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous <= 0.05);
}

TEST_CASE("solve: manufactured one-term solution y = t^2")
{
  const auto mc = manufacture(OneTermHalfOrder(), 2);
  double previous = 0.0;
  for (double h : {2e-3, 1e-3, 5e-4})
  {
    const auto traj = solve(mc.problem, {h, 1.0});
    const double e = SupError(traj.y, [&](double t) { return mc.Exact(t); });
    if (h == 1e-3)
    {
      CHECK(e <= 2e-2);
    }
    if (previous > 0.0)
    {
      CHECK(previous / e >= 1.8);
    }
    previous = e;
  }
}

TEST_CASE("solve: manufactured two-term independent solution and its derivative")
{
  const auto mc = manufacture(TwoTermIndependent(), 2);
  const auto traj = solve(mc.problem, {1e-3, 1.0, DirectVolterraInversion{}, true});
  CHECK(SupError(traj.y, [&](double t) { return mc.Exact(t); }) <= 2e-2);
  REQUIRE(traj.y_derivs);
  CHECK(SupError(traj.y_derivs->front(), [&](double t) { return mc.ExactDerivative(t, 1); }) <= 5e-2);
}

TEST_CASE("solve: Bagley-Torvik against the GL oracle")
{
  const auto p = BagleyTorvik();
  const auto reference = gl_direct_solve(p, {0.001, 30.0});
  const auto traj = solve(p, {0.01, 30.0});
  double d = 0.0;
  for (std::size_t i = 0; i < traj.y.size(); i++)
  {
    d = std::max(d, std::abs(traj.y[i] - reference.y[10 * i]));
  }
  CHECK(d <= 0.05);
}

TEST_CASE("solve: explosive problem reports the failing node")
{
  ProblemSpec p;
  p.terms = {{1.0, 1.0}};
  p.nonlinearity.Add(3, -1.0);  // y' = y^3 blows up in finite time
  p.forcing = PiecewiseForcing({{0.0, std::numeric_limits<double>::infinity(), {0.0}}});
  p.initial_conditions = {1.0};
  const auto traj = solve(p, {0.01, 5.0});
  REQUIRE(traj.diagnostics.nan_node);
  CHECK(!traj.ok());
  CHECK(traj.y.size() == *traj.diagnostics.nan_node);
  for (double v : traj.y.values())
  {
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("solve: deterministic bit-identical reruns")
{
  const SolverConfig cfg{0.02, 10.0, BabenkoInversion{20}, true};
  const auto a = solve(BagleyTorvik(3), cfg);
  const auto b = solve(BagleyTorvik(3), cfg);
  CHECK(std::memcmp(a.y.values().data(), b.y.values().data(), a.y.size() * sizeof(double)) == 0);
  CHECK(a.diagnostics.babenko_tail == b.diagnostics.babenko_tail);
}

TEST_CASE("reconstruct_y")
{
  const double h = 1e-3;
  const auto z1 = SampleSeries::Sample(h, 1001, [](double t) { return t; });
  const std::vector<double> zero = {0.0, 0.0};
  // 1 / Gamma(1.5)
  CHECK(std::abs(reconstruct_y(z1, zero, 0.5, 1000) - 1.12837916709551257) <= 2e-2);
  const std::vector<double> ics = {2.0, 3.0};
  CHECK(reconstruct_y(z1, ics, 0.5, 0) == 2.0);
  CHECK(reconstruct_y(z1, ics, 0.0, 500) == doctest::Approx(2.0 + 3.0 * 0.5 + 0.5));
  CHECK_THROWS_AS(reconstruct_y(z1, ics, 1.0, 1), DomainError);
}

TEST_CASE("reconstruct_derivatives")
{
  const SampleSeries zero(0.1, std::vector<double>(30, 0.0));
  const std::vector<double> none = {0.0, 0.0, 0.0};
  for (const auto &series : reconstruct_derivatives(zero, none, 2.4, 3))
  {
    for (double v : series.values())
    {
      CHECK(v == 0.0);
    }
  }
  // Polynomial part: y = 1 + 2t + 3t^2/2 has y' = 2 + 3t and y'' = 3.
  const std::vector<double> ics = {1.0, 2.0, 3.0};
  const auto d = reconstruct_derivatives(zero, ics, 2.4, 3);
  REQUIRE(d.size() == 2);
  CHECK(d[0][10] == doctest::Approx(2.0 + 3.0 * 1.0));
  CHECK(d[1][10] == doctest::Approx(3.0));
  CHECK(reconstruct_derivatives(zero, ics, 0.5, 1).empty());
}

TEST_CASE("InitialDataPolynomial")
{
  const std::vector<double> b = {1.0, -2.0, 6.0, 12.0};
  const double t = 0.7;
  CHECK(InitialDataPolynomial(b, t) == doctest::Approx(1.0 - 2.0 * t + 3.0 * t * t + 2.0 * t * t * t));
  CHECK(InitialDataPolynomial(b, t, 1) == doctest::Approx(-2.0 + 6.0 * t + 6.0 * t * t));
  CHECK(InitialDataPolynomial(b, 0.0, 2) == 6.0);
  CHECK(InitialDataPolynomial(b, t, 4) == 0.0);
}
