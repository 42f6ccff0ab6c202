// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_BENCHMARKS_HPP
#define FODE_BENCHMARKS_HPP

#include "fode/problem.hpp"

namespace fode
{

// y'' + 0.5 D^1.5 y + c y^power = f, f = 8 on [0, 1) and 0 afterwards,
// y(0) = y'(0) = 0. power = 1 is the linear Bagley-Torvik equation, power = 3
// its cubic variant.
ProblemSpec BagleyTorvik(int power = 1, double c = 0.5);

// D^0.5 y + y (forcing left empty for manufacture()).
ProblemSpec OneTermHalfOrder();

// D^1.7 y + D^0.3 y + y (forcing left empty for manufacture()).
ProblemSpec TwoTermIndependent();

}  // namespace fode

#endif  // FODE_BENCHMARKS_HPP
