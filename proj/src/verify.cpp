// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>
#include "fode/benchmarks.hpp"
#include "fode/decompose.hpp"
#include "fode/fracops.hpp"
#include "fode/gamma.hpp"
#include "fode/stepper.hpp"

namespace fode
{

namespace
{

double SupDifference(std::span<const double> a, std::span<const double> b)
{
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); i++)
  {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

bool BitIdentical(std::span<const double> a, std::span<const double> b)
{
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::size_t NodesOn(double t_end, double h)
{
  return static_cast<std::size_t>(std::llround(t_end / h)) + 1;
}

// Operator value at t = 1 for z = t^p on a grid of step h.
double PowerAtOne(bool integral, double alpha, int p, double h)
{
  const std::size_t n = NodesOn(1.0, h);
  const auto z = SampleSeries::Sample(h, n, [p](double t) { return std::pow(t, p); });
  return integral ? frac_integral(z, alpha, n - 1) : frac_derivative01(z, alpha, n - 1);
}

std::string Fixed(double v)
{
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

PropertyResult CheckGammaReferences(const std::function<double(double)> &gamma_fn)
{
  const std::vector<std::pair<double, double>> cases = {
      {1.0, 1.0},
      {5.0, 24.0},
      {0.5, std::sqrt(std::numbers::pi)},
      {1.5, 0.5 * std::sqrt(std::numbers::pi)},
      {10.0, 362880.0}};
  double worst = 0.0;
  for (const auto &[x, expected] : cases)
  {
    worst = std::max(worst, std::abs(gamma_fn(x) - expected) / expected);
  }
  return {"gamma reference values", worst <= 1e-10, worst, 1e-10, "max relative error"};
}

PropertyResult CheckPowerRules(bool integral, const std::function<double(double)> &gamma_fn)
{
  const double tolerance = integral ? 0.01 : 0.02;
  const double min_order = integral ? 1.0 : 0.9;
  // Errors this small are rounding, not truncation; the order is then moot.
  constexpr double kRoundingFloor = 1e-12;
  double worst_error = 0.0;
  double worst_order = std::numeric_limits<double>::infinity();
  bool ok = true;
  std::ostringstream detail;
  for (int p : {1, 2, 3})
  {
    for (double alpha : {0.25, 0.5, 0.75})
    {
      const double exact = gamma_fn(p + 1.0) / gamma_fn(p + 1.0 + (integral ? alpha : -alpha));
      const double e1 = std::abs(PowerAtOne(integral, alpha, p, 1e-3) - exact) / std::abs(exact);
      const double e2 = std::abs(PowerAtOne(integral, alpha, p, 5e-4) - exact) / std::abs(exact);
      worst_error = std::max(worst_error, e1);
      const bool at_floor = e1 <= kRoundingFloor && e2 <= kRoundingFloor;
      const double order = at_floor ? std::numeric_limits<double>::infinity() : std::log2(e1 / e2);
      worst_order = std::min(worst_order, order);
      if (!(e1 <= tolerance) || !(order >= min_order))
      {
        ok = false;
        detail << " fail(p=" << p << ",a=" << alpha << ",err=" << e1 << ",order=" << order << ")";
      }
    }
  }
  std::ostringstream head;
  head << "max relative error at h=1e-3; min observed order " << Fixed(worst_order)
       << " (need >= " << min_order << ")" << detail.str();
  return {integral ? "integral power rule (p=1..3, alpha=.25,.5,.75)"
                   : "derivative power rule (p=1..3, alpha=.25,.5,.75)",
          ok, worst_error, tolerance, head.str()};
}

PropertyResult CheckSemigroup()
{
  const double h = 1e-3;
  const auto z = SampleSeries::Sample(h, NodesOn(1.0, h), [](double t) { return t; });
  const auto lhs = apply_operator(apply_operator(z, OperatorOrder(-0.4)), OperatorOrder(-0.3));
  const auto rhs = apply_operator(z, OperatorOrder(-0.7));
  const double d = SupDifference(lhs.values(), rhs.values());
  return {"composition I^0.3 I^0.4 = I^0.7", d <= 1e-2, d, 1e-2, "sup norm on [0,1], h=1e-3"};
}

PropertyResult CheckLeftInverse()
{
  const double h = 1e-3;
  const auto z = SampleSeries::Sample(h, NodesOn(1.0, h), [](double t) { return t; });
  const auto back = apply_operator(apply_operator(z, OperatorOrder(-0.5)), OperatorOrder(0.5));
  const double d = SupDifference(back.values(), z.values());
  return {"left inverse D^0.5 I^0.5 = I", d <= 2e-2, d, 2e-2, "sup norm on [0,1], h=1e-3"};
}

PropertyResult CheckBabenkoShortHorizon()
{
  // On [0, 3] the binomial series is converged at K = 30; what remains is the
  // quadrature gap between I_h^{dj} and (I_h^d)^j, which must shrink with h.
  const auto p = BagleyTorvik();
  double diffs[2] = {0.0, 0.0};
  double tail = 0.0;
  const double steps[2] = {0.01, 0.005};
  for (int k = 0; k < 2; k++)
  {
    SolverConfig direct{steps[k], 3.0, DirectVolterraInversion{}, false};
    SolverConfig babenko{steps[k], 3.0, BabenkoInversion{30, 1e-10}, false};
    const auto a = solve(p, direct);
    const auto b = solve(p, babenko);
    diffs[k] = SupDifference(a.y.values(), b.y.values());
    tail = std::max(tail, b.diagnostics.babenko_tail.value_or(0.0));
  }
  const bool ok = tail <= 1e-10 && diffs[0] <= 1e-3 && diffs[0] >= 1.5 * diffs[1];
  std::ostringstream detail;
  detail << "Bagley-Torvik on [0,3], K=30: sup diff h=0.01 " << diffs[0] << ", h=0.005 "
         << diffs[1] << ", K-th term " << tail;
  return {"Babenko vs direct inversion", ok, diffs[0], 1e-3, detail.str()};
}

PropertyResult CheckInitialValue()
{
  ProblemSpec one_term;
  one_term.terms = {{1.0, 0.5}};
  one_term.nonlinearity.Add(1, 1.0);
  one_term.forcing = PiecewiseForcing({{0.0, std::numeric_limits<double>::infinity(), {1.0}}});
  one_term.initial_conditions = {0.7};
  ProblemSpec two_term = BagleyTorvik();
  two_term.initial_conditions = {-1.25, 0.5};

  double worst = 0.0;
  for (const auto &p : {one_term, two_term})
  {
    const auto traj = solve(p, {0.01, 1.0, DirectVolterraInversion{}, false});
    worst = std::max(worst, std::abs(traj.y[0] - p.initial_conditions.front()));
  }
  return {"y(0) = b0 exactly", worst == 0.0, worst, 0.0, "one-term and dependent problems"};
}

PropertyResult CheckTemporaryOrigin()
{
  double worst = 0.0;
  for (const auto &p : {BagleyTorvik(), BagleyTorvik(3)})
  {
    for (const InversionMethod &inv : {InversionMethod{DirectVolterraInversion{}},
                                       InversionMethod{BabenkoInversion{}}})
    {
      const auto traj = solve(p, {0.01, 2.0, inv, false});
      worst = std::max(worst, std::abs(traj.z1[0]));
    }
  }
  return {"z1(0) = 0 exactly", worst == 0.0, worst, 0.0, "both inversions"};
}

PropertyResult CheckCausality()
{
  const double h = 0.01;
  const std::size_t n = 256;
  const std::size_t cut = 128;
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> base(n);
  for (auto &v : base)
  {
    v = dist(rng);
  }
  base[0] = 0.0;
  auto perturbed = base;
  for (std::size_t i = cut + 1; i < n; i++)
  {
    perturbed[i] += 10.0 * dist(rng);
  }
  bool ok = true;
  for (double mu : {-1.3, -0.5, 0.0, 0.25, 0.75, 1.0, 1.5, 2.4})
  {
    const auto a = apply_operator(SampleSeries(h, base), OperatorOrder(mu));
    const auto b = apply_operator(SampleSeries(h, perturbed), OperatorOrder(mu));
    ok = ok && BitIdentical(a.values().first(cut + 1), b.values().first(cut + 1));
  }
  return {"operator causality", ok, ok ? 0.0 : 1.0, 0.0,
          "outputs at nodes <= i unchanged by perturbing nodes > i"};
}

PropertyResult CheckDeterminism()
{
  bool ok = true;
  for (const auto &p : {BagleyTorvik(), BagleyTorvik(3)})
  {
    const SolverConfig cfg{0.01, 5.0, DirectVolterraInversion{}, true};
    const auto a = solve(p, cfg);
    const auto b = solve(p, cfg);
    ok = ok && BitIdentical(a.y.values(), b.y.values()) &&
         BitIdentical(a.z1.values(), b.z1.values()) &&
         BitIdentical(a.y_derivs->front().values(), b.y_derivs->front().values());
  }
  return {"bit-identical reruns", ok, ok ? 0.0 : 1.0, 0.0, "Bagley-Torvik linear and cubic"};
}

std::vector<PropertyResult> run_property_suite(const VerifyOptions &options)
{
  const std::function<double(double)> gamma_fn =
      options.reference_gamma ? options.reference_gamma : [](double x) { return gamma(x); };
  return {CheckGammaReferences(gamma_fn),
          CheckPowerRules(true, gamma_fn),
          CheckPowerRules(false, gamma_fn),
          CheckSemigroup(),
          CheckLeftInverse(),
          CheckBabenkoShortHorizon(),
          CheckInitialValue(),
          CheckTemporaryOrigin(),
          CheckCausality(),
          CheckDeterminism()};
}

}  // namespace fode
