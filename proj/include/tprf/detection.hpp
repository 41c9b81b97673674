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
#ifndef TPRF_DETECTION_HPP
#define TPRF_DETECTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "tprf/correlations.hpp"
#include "tprf/types.hpp"

namespace tprf {

/// Impulse response of the detection chain's digital filter. Taps are
/// normalized to unit DC gain.
struct FilterKernel {
  Eigen::VectorXd taps;
  double sample_period = 0.0;   // seconds
  double bandwidth_hint = 0.0;  // Hz
};

// Boxcar of duration 1/bandwidth (the experimental kernel shape is not
// published; this is the simplest shape consistent with the stated
// bandwidth).
FilterKernel boxcar_kernel(double bandwidth_hz, double sample_period);

// Raised-cosine (Hann) alternative, total width 2/bandwidth.
FilterKernel raised_cosine_kernel(double bandwidth_hz, double sample_period);

// One tap per line, plain text.
FilterKernel load_kernel(const std::string& path, double sample_period);

// Finite-bandwidth model for measured g2: convolve the symmetrically
// extended trace twice with the elementwise-squared, renormalized kernel.
CorrelationTrace filter_g2(const CorrelationTrace& trace,
                           const FilterKernel& kernel);

/// Drive-power calibration, Omega = k sqrt(P_in * 10^(-attenuation/10)).
struct PowerCalibration {
  double k = 0.0;  // rad/s per sqrt(W)
  double reference_attenuation_db = 0.0;
  double residual_norm = 0.0;  // from the fit, rad/s
};

double omega_from_power(double p_in_watt, const PowerCalibration& cal);

// Least-squares slope of Omega vs sqrt(P_in) through the origin.
PowerCalibration fit_calibration(
    const std::vector<std::pair<double, double>>& points);

}  // namespace tprf

#endif  // TPRF_DETECTION_HPP
