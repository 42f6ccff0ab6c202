// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include "fode/errors.hpp"

namespace fode
{

namespace
{

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(x) for x >= 0.5.
double LanczosGamma(double x)
{
  const double xm1 = x - 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t k = 1; k < kLanczosCoefficients.size(); k++)
  {
    series += kLanczosCoefficients[k] / (xm1 + static_cast<double>(k));
  }
  const double t = xm1 + kLanczosG + 0.5;
  // t^(x - 1/2) is split in two halves so that it does not overflow before
  // exp(-t) brings it back into range near x = 171.
  const double half_power = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) *
         series;
}

}  // namespace

double gamma(double x)
{
  if (std::isnan(x))
  {
    throw DomainError("gamma: argument is NaN");
  }
  if (x <= 0.0 && x == std::floor(x))
  {
    throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  if (x > kGammaMaxArgument)
  {
    throw RangeError("gamma: overflow for argument " + std::to_string(x));
  }
  if (x < 0.5)
  {
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    const double s = std::sin(std::numbers::pi * x);
    const double result = std::numbers::pi / (s * LanczosGamma(1.0 - x));
    if (!std::isfinite(result))
    {
      throw RangeError("gamma: overflow for argument " + std::to_string(x));
    }
    return result;
  }
  return LanczosGamma(x);
}

}  // namespace fode
