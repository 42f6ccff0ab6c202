// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_VERIFY_HPP
#define FODE_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace fode
{

struct PropertyResult
{
  std::string name;
  bool passed = false;
  // Worst measured value and the bound it is held to (meaning per property).
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyOptions
{
  // Gamma used for the closed-form reference values; swapping it for a broken
  // implementation must make the suite fail.
  std::function<double(double)> reference_gamma;
};

// Built-in property suite: gamma reference values, operator power rules and
// their convergence orders, composition laws, Babenko/direct agreement, and the
// structural invariants (initial value, zero temporary origin, causality,
// determinism).
std::vector<PropertyResult> run_property_suite(const VerifyOptions &options = {});

// Individual properties, also used by the acceptance suite.
PropertyResult CheckGammaReferences(const std::function<double(double)> &gamma_fn);
PropertyResult CheckPowerRules(bool integral, const std::function<double(double)> &gamma_fn);
PropertyResult CheckSemigroup();
PropertyResult CheckLeftInverse();
PropertyResult CheckBabenkoShortHorizon();
PropertyResult CheckInitialValue();
PropertyResult CheckTemporaryOrigin();
PropertyResult CheckCausality();
PropertyResult CheckDeterminism();

}  // namespace fode

#endif  // FODE_VERIFY_HPP
