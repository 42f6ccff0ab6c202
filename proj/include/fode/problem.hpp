// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_PROBLEM_HPP
#define FODE_PROBLEM_HPP

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace fode
{

// One term a * D^alpha y of the left-hand side.
struct FracTerm
{
  double coefficient = 0.0;
  double order = 0.0;

  friend bool operator==(const FracTerm &, const FracTerm &) = default;
};

// g(y) = sum_p c_p y^p over non-negative integer powers.
class Polynomial
{
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::pair<const int, double>> terms);

  // Adds c to the coefficient of y^power (repeated powers accumulate).
  void Add(int power, double coefficient);

  double operator()(double y) const;
  double Coefficient(int power) const;
  bool IsAtMostLinear() const;
  bool empty() const noexcept { return coefficients_.empty(); }
  const std::map<int, double> &coefficients() const noexcept { return coefficients_; }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  std::map<int, double> coefficients_;
};

// f(t) = sum_k c_k t^k on the half-open interval [t_from, t_to).
struct ForcingSegment
{
  double t_from = 0.0;
  double t_to = std::numeric_limits<double>::infinity();
  std::vector<double> poly;

  friend bool operator==(const ForcingSegment &, const ForcingSegment &) = default;
};

// Piecewise-polynomial forcing. An empty segment list means f = 0. A time
// within 1e-12 (relative) of a breakpoint is treated as the breakpoint itself,
// so grid nodes i * h land on the right-hand segment.
class PiecewiseForcing
{
public:
  PiecewiseForcing() = default;
  explicit PiecewiseForcing(std::vector<ForcingSegment> segments);

  double operator()(double t) const;
  // Largest time covered (inf for an unbounded last segment or f = 0).
  double CoverageEnd() const;
  const std::vector<ForcingSegment> &segments() const noexcept { return segments_; }

  friend bool operator==(const PiecewiseForcing &, const PiecewiseForcing &) = default;

private:
  std::vector<ForcingSegment> segments_;
};

// Forcing given as an exact function of time, evaluated at grid nodes
// (used for manufactured solutions; not expressible in problem files).
struct ExactForcing
{
  std::function<double(double)> f;
  std::string description;
};

using Forcing = std::variant<PiecewiseForcing, ExactForcing>;

// Initial-value problem
//   sum_i a_i D^{alpha_i} y + g(y) = f(t),  y^(k)(0) = b_k, k = 0..m1-1,
// with Riemann-Liouville derivatives and lower terminal 0.
struct ProblemSpec
{
  std::vector<FracTerm> terms;
  Polynomial nonlinearity;
  Forcing forcing;
  std::vector<double> initial_conditions;

  double EvaluateForcing(double t) const;
  bool HasPiecewiseForcing() const;

  // Exact forcings never compare equal.
  friend bool operator==(const ProblemSpec &a, const ProblemSpec &b);
};

// Integer order m attached to alpha: ceil(alpha) for fractional alpha and
// alpha itself for integer alpha (classical derivative).
int IntegerOrderOf(double alpha);

// Checks the structural invariants (nonempty, a_1 != 0, finite values,
// strictly decreasing non-negative orders below the operator cap, one initial
// condition per k < m1, contiguous forcing segments starting at 0).
// Throws DomainError with a short message.
void ValidateProblem(const ProblemSpec &p);

}  // namespace fode

#endif  // FODE_PROBLEM_HPP
