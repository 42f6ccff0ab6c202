// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_GAMMA_HPP
#define FODE_GAMMA_HPP

namespace fode
{

// Largest argument for which Gamma(x) is finite in double precision.
inline constexpr double kGammaMaxArgument = 171.6243769563027;

// Gamma function via the Lanczos approximation (g = 7, 9 terms), with the
// reflection formula for x < 0.5. Relative error is below 1e-13 on (0, 171].
// Throws DomainError at the poles x = 0, -1, -2, ... and RangeError when the
// result overflows.
double gamma(double x);

}  // namespace fode

#endif  // FODE_GAMMA_HPP
