// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_FRACOPS_HPP
#define FODE_FRACOPS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>
#include "fode/series.hpp"

namespace fode
{

// Immutable per-(kind, order, nodes) coefficient cache for the node-wise
// Riemann-Liouville quadratures (lower terminal 0, uniform step).
//
//   Integral:      weights[j] = (j+1)^a - (j-1)^a for j >= 1, weights[0] = 1
//                  (coefficient of z_i); boundary[i] = i^a - (i-1)^a is the
//                  coefficient of z_0 at node i.
//   Derivative01:  weights[j] = (j+1)^(1-a) - j^(1-a), 0 <= a < 1.
//   Grunwald:      weights[0] = 1, weights[j] = weights[j-1] (1 - (a+1)/j).
//
// Power differences are formed as j^p expm1(p log1p(+-1/j)) to avoid
// cancellation for large j.
class WeightTable
{
public:
  enum class Kind
  {
    Integral,
    Derivative01,
    Grunwald
  };

  WeightTable(Kind kind, double order, std::size_t nodes);

  Kind kind() const noexcept { return kind_; }
  double order() const noexcept { return order_; }
  std::size_t nodes() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> boundary() const noexcept { return boundary_; }

  // h-dependent prefactor: h^a / (2 Gamma(1+a)), h^-a / Gamma(2-a) or h^-a.
  double Scale(double h) const;

private:
  Kind kind_;
  double order_;
  double gamma_factor_;
  std::vector<double> weights_;
  std::vector<double> boundary_;
};

// Node-wise Riemann-Liouville integral of order alpha > 0 at node i
// (product-trapezoid rule; reduces to the composite trapezoid rule at alpha = 1).
// Returns 0 at i = 0.
double frac_integral(const SampleSeries &z, double alpha, std::size_t i);

// Node-wise Riemann-Liouville derivative for 0 <= alpha < 1. At i = 0 the
// result is 0 if z_0 = 0; otherwise SingularOriginError is thrown.
double frac_derivative01(const SampleSeries &z, double alpha, std::size_t i);

// Grunwald-Letnikov derivative for alpha >= 1. Requires z_0 = 0, where it
// coincides with the Riemann-Liouville derivative.
double frac_derivative_general(const SampleSeries &z, double alpha, std::size_t i);

// Table-driven variants for repeated evaluation. `z` holds samples through at
// least node i; later samples are never read. The table must have the right
// kind and at least i + 1 nodes.
double frac_integral(std::span<const double> z, double h, const WeightTable &table,
                     std::size_t i);
double frac_derivative01(std::span<const double> z, double h, const WeightTable &table,
                         std::size_t i);
double frac_derivative_general(std::span<const double> z, double h, const WeightTable &table,
                               std::size_t i);

// Only the history part of the integral at node i, i.e. everything except the
// z_i term: boundary[i] z_0 + sum_{j=1}^{i-1} weights[j] z_{i-j}, unscaled.
double integral_history_sum(std::span<const double> z, const WeightTable &table, std::size_t i);

// Dispatches on the sign and size of the order and applies the operator at
// every node. Output node i depends only on input nodes 0..i.
SampleSeries apply_operator(const SampleSeries &z, OperatorOrder mu);

// Evaluates one node of an operator of arbitrary order using a prepared table;
// used where a single operator is applied repeatedly to a growing history.
class NodeOperator
{
public:
  NodeOperator(OperatorOrder mu, double h, std::size_t nodes);

  double order() const noexcept { return mu_; }
  double operator()(std::span<const double> z, std::size_t i) const;

private:
  double mu_;
  double h_;
  std::optional<WeightTable> table_;  // empty for the identity
};

// sum_{j=first}^{i} weights[j] z[i-j], summed pairwise.
double Convolve(std::span<const double> weights, std::span<const double> z, std::size_t i,
                std::size_t first = 0);

}  // namespace fode

#endif  // FODE_FRACOPS_HPP
