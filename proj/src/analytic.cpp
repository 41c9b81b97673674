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
#include "tprf/analytic.hpp"

#include <cmath>

namespace tprf {

AnalyticFlux analytic_flux(const AnalyticParams& p, double gamma) {
  const double e2 = p.epsilon * p.epsilon;
  const double e4 = e2 * e2;
  const double e6 = e4 * e2;
  const double g2 = p.gamma_over_alpha * p.gamma_over_alpha;
  AnalyticFlux out;
  out.value =
      gamma * e2 * (55.0 * e4 - 450.0 * e6 + 4.0 * g2) / (4.0 * g2 + 9.0 * e4);
  out.out_of_validity = p.epsilon > kAnalyticValidityLimit || out.value < 0.0;
  return out;
}

double analytic_g2zero(double omega, double alpha, double gamma) {
  const double ag2 = alpha * alpha * gamma * gamma;
  const double w4 = omega * omega * omega * omega;
  const double num = (4.0 * ag2 + 9.0 * w4) * (4.0 * ag2 + 479.0 * w4);
  const double den = 4.0 * ag2 + 55.0 * w4;
  return num / (den * den);
}

G2MaxPoint g2max_point(double alpha, double gamma) {
  const double unit = std::sqrt(std::abs(alpha) * gamma);
  double lo = 0.0;
  double hi = 4.0 * unit;  // the maximum sits near 0.54 * unit
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - gr * (hi - lo);
  double b = lo + gr * (hi - lo);
  double fa = analytic_g2zero(a, alpha, gamma);
  double fb = analytic_g2zero(b, alpha, gamma);
  while (hi - lo > 1e-12 * unit) {
    if (fa > fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - gr * (hi - lo);
      fa = analytic_g2zero(a, alpha, gamma);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + gr * (hi - lo);
      fb = analytic_g2zero(b, alpha, gamma);
    }
  }
  G2MaxPoint out;
  out.omega_star = 0.5 * (lo + hi);
  out.g2_star = analytic_g2zero(out.omega_star, alpha, gamma);
  return out;
}

}  // namespace tprf
