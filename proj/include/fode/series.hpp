// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_SERIES_HPP
#define FODE_SERIES_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fode
{

// Values of one function on the uniform grid t_i = i * h, starting at t = 0.
class SampleSeries
{
public:
  SampleSeries(double h, std::vector<double> values);

  // Samples f at t_i = i * h for i = 0, ..., nodes - 1.
  static SampleSeries Sample(double h, std::size_t nodes, const std::function<double(double)> &f);

  double step() const noexcept { return h_; }
  std::size_t size() const noexcept { return values_.size(); }
  double time(std::size_t i) const noexcept { return static_cast<double>(i) * h_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const SampleSeries &, const SampleSeries &) = default;

private:
  double h_;
  std::vector<double> values_;
};

// Throws DomainError unless both series share the same step.
void RequireSameStep(const SampleSeries &a, const SampleSeries &b);

// Signed operator order: mu < 0 is an integral of order |mu|, mu = 0 the
// identity, mu > 0 a derivative. |mu| is capped to catch misparsed input.
class OperatorOrder
{
public:
  static constexpr double kDefaultCap = 10.0;

  explicit OperatorOrder(double mu, double cap = kDefaultCap);

  double value() const noexcept { return mu_; }
  bool is_integral() const noexcept { return mu_ < 0.0; }
  bool is_identity() const noexcept { return mu_ == 0.0; }
  double magnitude() const noexcept { return mu_ < 0.0 ? -mu_ : mu_; }

private:
  double mu_;
};

}  // namespace fode

#endif  // FODE_SERIES_HPP
