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
#ifndef TPRF_CORRELATIONS_HPP
#define TPRF_CORRELATIONS_HPP

#include <vector>

#include "tprf/types.hpp"

namespace tprf {

/// Sampled two-time correlation. Values are complex for g1; g2 traces carry a
/// negligible imaginary residue (checked at 1e-9) and are read through
/// real_values().
struct CorrelationTrace {
  Eigen::VectorXd delays;  // tau >= 0, strictly increasing, seconds
  Vector values;
  bool normalized = false;

  Eigen::VectorXd real_values() const { return values.real(); }
};

/// One-sided inelastic emission spectrum on a frequency grid relative to the
/// drive, from the symmetric extension g1(-tau) = g1(tau)*.
struct Spectrum {
  Eigen::VectorXd frequencies;  // rad/s relative to the drive
  Eigen::VectorXd psd;          // photon flux density per rad/s
};

// Steady-state flux <F'F>.
double steady_flux(const Matrix& rho_st, const Matrix& field);

// Steady-state mean <F>.
cxd steady_mean(const Matrix& rho_st, const Matrix& field);

// field - <field>_st * I; spectra are computed for this fluctuation operator
// so the elastic delta at the drive frequency never enters.
Matrix fluctuation_operator(const Matrix& field, const Matrix& rho_st);

// g1(tau) = Tr[F' e^{L tau} (F rho_st)] via the quantum regression theorem.
// rho_st must satisfy L rho_st = 0 at tolerance, else StaleStateError.
CorrelationTrace correlation_g1(const Matrix& liou, const Matrix& rho_st,
                                const Matrix& field,
                                const Eigen::VectorXd& delays);

// g2(tau) = Tr[F'F e^{L tau} (F rho_st F')], optionally normalized by
// <F'F>^2. Normalization with flux below 1e-14 throws
// DegenerateNormalizationError.
CorrelationTrace correlation_g2(const Matrix& liou, const Matrix& rho_st,
                                const Matrix& field,
                                const Eigen::VectorXd& delays, bool normalize);

// Normalized zero-delay autocorrelation, no propagation required:
// Tr[F'F F rho F'] / <F'F>^2.
double g2_zero(const Matrix& rho_st, const Matrix& field);

// Discrete Fourier transform of the symmetrically extended g1 on a uniform
// delay grid starting at zero. mean_field is the steady-state mean of the
// operator the trace was computed for; a residue above tolerance means the
// elastic component was not subtracted and raises
// ElasticContaminationError. Optional Hann window for short grids.
Spectrum power_spectrum(const CorrelationTrace& g1_trace, cxd mean_field,
                        bool hann_window = false);

// Uniform grid helper: n points, tau_0 = 0, tau_{n-1} = tau_max.
Eigen::VectorXd uniform_delays(double tau_max, int n);

// Indices of local maxima with prominence above rel_prominence * max(psd).
std::vector<int> find_peaks(const Eigen::VectorXd& psd, double rel_prominence);

}  // namespace tprf

#endif  // TPRF_CORRELATIONS_HPP
