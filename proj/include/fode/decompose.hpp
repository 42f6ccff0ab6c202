// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_DECOMPOSE_HPP
#define FODE_DECOMPOSE_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>
#include "fode/fracops.hpp"
#include "fode/problem.hpp"
#include "fode/series.hpp"

namespace fode
{

enum class SubclassKind
{
  OneTerm,
  Independent,
  Dependent
};

struct Subclass
{
  SubclassKind kind = SubclassKind::OneTerm;
  // Number of leading terms sharing m1 (>= 2 only for Dependent).
  int shared = 1;
  // Integer order m_i of every term.
  std::vector<int> integer_orders;
};

// A term a_i D^{alpha_i} y folded into a_i D^{mu_i} z1 with
// mu_i = (m1 - alpha1) + alpha_i.
struct RhsLink
{
  double coefficient = 0.0;
  double effective_order = 0.0;
};

// w = z1 + sum_j ratio_j I^{integral_order_j} z1 for the terms sharing m1.
struct WLink
{
  double ratio = 0.0;
  double integral_order = 0.0;
};

struct DirectVolterraInversion
{
};

// Truncated binomial series z1 = sum_{j=0}^{K} (-ratio)^j I^{delta j} w.
struct BabenkoInversion
{
  int terms = 30;
  // Sup norm of the K-th term above which the series is reported unconverged.
  double tolerance = 1e-8;
};

using InversionMethod = std::variant<DirectVolterraInversion, BabenkoInversion>;

// Solver-ready form: one integer-order ODE D^{m1} s = RHS for s = z1 (one-term
// and independent problems) or s = w (dependent problems), plus the relations
// that recover z1 and y.
struct DecomposedSystem
{
  int m1 = 1;
  double a1 = 1.0;
  double alpha1 = 0.0;
  Subclass subclass;
  std::vector<RhsLink> rhs_links;
  std::vector<WLink> w_links;
  // nu = m1 - alpha1 in [0, 1): y = P(t) + D^nu z1.
  double reconstruction_order = 0.0;
  std::vector<double> ic_poly;
  InversionMethod inversion;
};

Subclass classify(const ProblemSpec &p);

// Throws BuildError for shapes the decomposition cannot handle (alpha1 = 0,
// Babenko with more than two terms sharing m1).
DecomposedSystem build(const ProblemSpec &p, InversionMethod inversion = DirectVolterraInversion{});

struct BabenkoResult
{
  SampleSeries z1;
  // Sup norm of the last (K-th) series term.
  double tail = 0.0;
  bool converged = true;
};

// Node-wise Babenko inversion with prepared I^{delta j} tables, j = 1..K.
class BabenkoInverter
{
public:
  BabenkoInverter(double ratio, double delta, int terms, double h, std::size_t nodes);

  struct Node
  {
    double value;
    double last_term;
  };

  // `w` holds samples through node i.
  Node operator()(std::span<const double> w, std::size_t i) const;

  int terms() const noexcept { return static_cast<int>(tables_.size()); }

private:
  double ratio_;
  double h_;
  std::vector<WeightTable> tables_;
};

BabenkoResult babenko_invert(const SampleSeries &w, double ratio, double delta, int terms,
                             double tolerance = BabenkoInversion{}.tolerance);

// Solves w_i = z1_i + sum_j ratio_j (I^{delta_j} z1)_i for z1_i node by node.
// The quadrature gives z1_i the explicit coefficient h^d / (2 Gamma(1+d)), so
// each node is a scalar linear equation in the already-known history.
class VolterraInverter
{
public:
  VolterraInverter(std::vector<WLink> links, double h, std::size_t nodes);

  // `z1` holds the solved history at nodes 0..i-1 and has at least i + 1
  // entries; entry i is not read.
  double operator()(double w_i, std::span<const double> z1, std::size_t i) const;

  double pivot() const noexcept { return pivot_; }

private:
  std::vector<WLink> links_;
  std::vector<WeightTable> tables_;
  std::vector<double> scales_;
  double pivot_;
};

// Single-node convenience form; z1_history holds nodes 0..i-1.
double volterra_direct_invert(const SampleSeries &w, std::span<const WLink> links, std::size_t i,
                              std::span<const double> z1_history);

}  // namespace fode

#endif  // FODE_DECOMPOSE_HPP
