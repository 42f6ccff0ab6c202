// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include "fode/errors.hpp"

namespace fode
{

Subclass classify(const ProblemSpec &p)
{
  ValidateProblem(p);
  Subclass result;
  for (const auto &term : p.terms)
  {
    result.integer_orders.push_back(IntegerOrderOf(term.order));
  }
  const int m1 = result.integer_orders.front();
  result.shared = static_cast<int>(std::count(result.integer_orders.begin(),
                                              result.integer_orders.end(), m1));
  if (p.terms.size() == 1)
  {
    result.kind = SubclassKind::OneTerm;
  }
  else if (result.shared >= 2)
  {
    result.kind = SubclassKind::Dependent;
  }
  else
  {
    result.kind = SubclassKind::Independent;
  }
  return result;
}

DecomposedSystem build(const ProblemSpec &p, InversionMethod inversion)
{
  DecomposedSystem sys;
  sys.subclass = classify(p);
  sys.m1 = sys.subclass.integer_orders.front();
  sys.a1 = p.terms.front().coefficient;
  sys.alpha1 = p.terms.front().order;
  if (sys.m1 < 1)
  {
    throw BuildError("leading order must be positive (alpha1 = 0 has no derivative to decompose)");
  }
  sys.reconstruction_order = static_cast<double>(sys.m1) - sys.alpha1;
  sys.ic_poly = p.initial_conditions;
  sys.inversion = inversion;

  const std::size_t absorbed =
      sys.subclass.kind == SubclassKind::Dependent ? static_cast<std::size_t>(sys.subclass.shared)
                                                   : 1;
  for (std::size_t j = 1; j < absorbed; j++)
  {
    sys.w_links.push_back({p.terms[j].coefficient / sys.a1, sys.alpha1 - p.terms[j].order});
  }
  for (std::size_t i = absorbed; i < p.terms.size(); i++)
  {
    sys.rhs_links.push_back(
        {p.terms[i].coefficient, sys.reconstruction_order + p.terms[i].order});
  }
  if (std::holds_alternative<BabenkoInversion>(inversion))
  {
    const auto &babenko = std::get<BabenkoInversion>(inversion);
    if (sys.w_links.size() > 1)
    {
      throw BuildError("Babenko inversion is limited to two terms sharing m1; use direct inversion");
    }
    if (babenko.terms < 1)
    {
      throw BuildError("Babenko inversion needs at least one series term");
    }
  }
  return sys;
}

BabenkoInverter::BabenkoInverter(double ratio, double delta, int terms, double h,
                                 std::size_t nodes)
  : ratio_(ratio), h_(h)
{
  if (!(delta > 0.0))
  {
    throw DomainError("Babenko inversion needs a positive order difference");
  }
  if (terms < 1)
  {
    throw DomainError("Babenko inversion needs K >= 1");
  }
  tables_.reserve(static_cast<std::size_t>(terms));
  for (int j = 1; j <= terms; j++)
  {
    tables_.emplace_back(WeightTable::Kind::Integral, delta * j, nodes);
  }
}

BabenkoInverter::Node BabenkoInverter::operator()(std::span<const double> w, std::size_t i) const
{
  double value = w[i];
  double last = std::abs(w[i]);
  double sign_power = 1.0;
  for (const auto &table : tables_)
  {
    sign_power *= -ratio_;
    // A zero ratio makes every later term vanish; skip the quadrature.
    const double term = sign_power == 0.0 ? 0.0 : sign_power * frac_integral(w, h_, table, i);
    value += term;
    last = std::abs(term);
  }
  return {value, last};
}

BabenkoResult babenko_invert(const SampleSeries &w, double ratio, double delta, int terms,
                             double tolerance)
{
  const BabenkoInverter inverter(ratio, delta, terms, w.step(), w.size());
  std::vector<double> z1(w.size());
  double tail = 0.0;
  for (std::size_t i = 0; i < w.size(); i++)
  {
    const auto node = inverter(w.values(), i);
    z1[i] = node.value;
    tail = std::max(tail, node.last_term);
  }
  return {SampleSeries(w.step(), std::move(z1)), tail, tail <= tolerance};
}

VolterraInverter::VolterraInverter(std::vector<WLink> links, double h, std::size_t nodes)
  : links_(std::move(links)), pivot_(1.0)
{
  for (const auto &link : links_)
  {
    tables_.emplace_back(WeightTable::Kind::Integral, link.integral_order, nodes);
    scales_.push_back(link.ratio * tables_.back().Scale(h));
    pivot_ += scales_.back();
  }
  if (!std::isfinite(pivot_) || std::abs(pivot_) <= 1e-12)
  {
    throw SingularInversionError("direct Volterra inversion has a zero pivot");
  }
}

double VolterraInverter::operator()(double w_i, std::span<const double> z1, std::size_t i) const
{
  if (i == 0)
  {
    return 0.0;
  }
  double rhs = w_i;
  for (std::size_t k = 0; k < links_.size(); k++)
  {
    rhs -= scales_[k] * integral_history_sum(z1, tables_[k], i);
  }
  return rhs / pivot_;
}

double volterra_direct_invert(const SampleSeries &w, std::span<const WLink> links, std::size_t i,
                              std::span<const double> z1_history)
{
  if (i >= w.size())
  {
    throw DomainError("node index outside the w series");
  }
  if (z1_history.size() < i)
  {
    throw DomainError("z1 history must cover nodes 0..i-1");
  }
  const VolterraInverter inverter({links.begin(), links.end()}, w.step(), i + 1);
  std::vector<double> z1(z1_history.begin(), z1_history.begin() + static_cast<std::ptrdiff_t>(i));
  z1.push_back(0.0);
  return inverter(w[i], z1, i);
}

}  // namespace fode
