/* Copyright 2026 The tprf Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef TPRF_ANALYTIC_HPP
#define TPRF_ANALYTIC_HPP

#include "tprf/types.hpp"

namespace tprf {

/// Dimensionless inputs of the closed-form expressions: epsilon = Omega/|alpha|
/// and Gamma/|alpha| (the expressions use the ratio squared, so the sign of
/// alpha drops out).
struct AnalyticParams {
  double epsilon = 0.0;
  double gamma_over_alpha = 0.0;
};

// The closed forms are perturbative; beyond this epsilon they drift.
inline constexpr double kAnalyticValidityLimit = 0.2;

struct AnalyticFlux {
  double value = 0.0;        // photons per second
  bool out_of_validity = false;
};

// Integrated two-photon-line photon flux at resonance:
// P = Gamma * eps^2 [55 eps^4 - 450 eps^6 + 4 (Gamma/alpha)^2]
//     / [4 (Gamma/alpha)^2 + 9 eps^4].
AnalyticFlux analytic_flux(const AnalyticParams& p, double gamma);

// Zero-delay autocorrelation of the two-photon line at resonance:
// g2(0) = (4 a^2 G^2 + 9 W^4)(4 a^2 G^2 + 479 W^4) / (4 a^2 G^2 + 55 W^4)^2.
double analytic_g2zero(double omega, double alpha, double gamma);

struct G2MaxPoint {
  double omega_star = 0.0;  // rad/s
  double g2_star = 0.0;
};

// Argmax of analytic_g2zero over the drive strength (golden-section search);
// lands at Omega = 0.5367 sqrt(|alpha| Gamma) with value 2.8315.
G2MaxPoint g2max_point(double alpha, double gamma);

}  // namespace tprf

#endif  // TPRF_ANALYTIC_HPP
