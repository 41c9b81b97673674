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
#include "tprf/correlations.hpp"

#include <cmath>
#include <map>

#include <unsupported/Eigen/FFT>

#include "tprf/expm.hpp"
#include "tprf/kernels.hpp"
#include "tprf/lindblad.hpp"

namespace tprf {

double steady_flux(const Matrix& rho_st, const Matrix& field) {
  return (field.adjoint() * field * rho_st).trace().real();
}

cxd steady_mean(const Matrix& rho_st, const Matrix& field) {
  return (field * rho_st).trace();
}

Matrix fluctuation_operator(const Matrix& field, const Matrix& rho_st) {
  return field -
         steady_mean(rho_st, field) *
             Matrix::Identity(field.rows(), field.cols());
}

namespace {

void check_steady(const Matrix& liou, const Matrix& rho_st) {
  const double resid = (liou * vectorize(rho_st)).norm();
  if (resid > 1e-8 * liou.norm())
    throw StaleStateError("correlation: rho_st is not the steady state (|L rho| = " +
                          std::to_string(resid) + ")");
}

void check_delays(const Eigen::VectorXd& delays) {
  if (delays.size() == 0) throw GridError("correlation: empty delay grid");
  if (delays(0) < 0.0) throw GridError("correlation: delays must be >= 0");
  for (Eigen::Index i = 1; i < delays.size(); ++i)
    if (delays(i) <= delays(i - 1))
      throw GridError("correlation: delays must be strictly increasing");
}

// Tr[W' M] for vectorized M, column-stacking: vec(W)^dag vec(M).
cxd trace_against(const Vector& w_vec, const Vector& m_vec) {
  return kernels::dotc(w_vec.size(), w_vec.data(), m_vec.data());
}

// Evolve vec(initial) across the delay grid and record Tr[weight' . ] at
// each delay. Step propagators are cached per distinct increment, so a
// uniform grid costs a single matrix exponential.
Vector evolve_and_trace(const Matrix& liou, const Matrix& initial,
                        const Matrix& weight, const Eigen::VectorXd& delays) {
  Vector v = vectorize(initial);
  const Vector w = vectorize(weight);
  Vector out(delays.size());
  std::map<double, Matrix> steps;
  double t = 0.0;
  for (Eigen::Index i = 0; i < delays.size(); ++i) {
    const double dt = delays(i) - t;
    if (dt > 0.0) {
      auto it = steps.find(dt);
      if (it == steps.end())
        it = steps.emplace(dt, expm(liou * dt)).first;
      v = kernel_apply(it->second, v);
      t = delays(i);
    }
    out(i) = trace_against(w, v);
  }
  return out;
}

}  // namespace

CorrelationTrace correlation_g1(const Matrix& liou, const Matrix& rho_st,
                                const Matrix& field,
                                const Eigen::VectorXd& delays) {
  check_delays(delays);
  check_steady(liou, rho_st);
  CorrelationTrace trace;
  trace.delays = delays;
  trace.values = evolve_and_trace(liou, field * rho_st, field, delays);
  trace.normalized = false;
  return trace;
}

CorrelationTrace correlation_g2(const Matrix& liou, const Matrix& rho_st,
                                const Matrix& field,
                                const Eigen::VectorXd& delays,
                                bool normalize) {
  check_delays(delays);
  check_steady(liou, rho_st);
  const Matrix initial = field * rho_st * field.adjoint();
  const Matrix weight = field.adjoint() * field;
  CorrelationTrace trace;
  trace.delays = delays;
  trace.values = evolve_and_trace(liou, initial, weight.adjoint(), delays);
  if (normalize) {
    const double flux = steady_flux(rho_st, field);
    if (flux < 1e-14)
      throw DegenerateNormalizationError(
          "correlation_g2: steady flux below 1e-14, normalization degenerate");
    trace.values /= flux * flux;
  }
  trace.normalized = normalize;
  return trace;
}

double g2_zero(const Matrix& rho_st, const Matrix& field) {
  const double flux = steady_flux(rho_st, field);
  if (flux < 1e-14)
    throw DegenerateNormalizationError(
        "g2_zero: steady flux below 1e-14, normalization degenerate");
  const double numer =
      (field.adjoint() * field * field * rho_st * field.adjoint())
          .trace()
          .real();
  return numer / (flux * flux);
}

Spectrum power_spectrum(const CorrelationTrace& g1_trace, cxd mean_field,
                        bool hann_window) {
  const auto n = g1_trace.delays.size();
  if (n < 4) throw GridError("power_spectrum: need at least 4 samples");
  if (g1_trace.delays(0) != 0.0)
    throw GridError("power_spectrum: delay grid must start at tau = 0");
  const double dt = g1_trace.delays(1) - g1_trace.delays(0);
  for (Eigen::Index i = 1; i < n; ++i) {
    const double step = g1_trace.delays(i) - g1_trace.delays(i - 1);
    if (std::abs(step - dt) > 1e-9 * dt)
      throw GridError("power_spectrum: delay grid is not uniform");
  }
  const double scale =
      std::max(1.0, std::sqrt(std::abs(g1_trace.values(0).real())));
  if (std::abs(mean_field) > 1e-10 * scale)
    throw ElasticContaminationError(
        "power_spectrum: residual field mean " +
        std::to_string(std::abs(mean_field)) +
        "; subtract the steady-state mean before computing spectra");

  // Symmetric extension g1(-tau) = g1(tau)* packed into a length-2n periodic
  // array; the DFT is then real up to rounding.
  const auto m = 2 * n;
  std::vector<cxd> ext(m, cxd(0.0, 0.0));
  for (Eigen::Index i = 0; i < n; ++i) {
    double w = 1.0;
    if (hann_window && n > 1)
      w = 0.5 * (1.0 + std::cos(std::numbers::pi * double(i) / double(n - 1)));
    ext[i] = w * g1_trace.values(i);
    if (i > 0) ext[m - i] = w * std::conj(g1_trace.values(i));
  }

  Eigen::FFT<double> fft;
  std::vector<cxd> freq(m);
  fft.fwd(freq, ext);

  Spectrum spec;
  spec.frequencies.resize(m);
  spec.psd.resize(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    // Output slot j carries signed frequency index k = j - n. The transform
    // uses e^{+i omega tau}, which is the e^{-i} DFT evaluated at bin -k.
    const auto src = (3 * n - j) % m;
    const double k = double(j) - double(n);
    spec.frequencies(j) = two_pi * k / (double(m) * dt);
    spec.psd(j) = dt * freq[src].real();
  }
  return spec;
}

Eigen::VectorXd uniform_delays(double tau_max, int n) {
  if (n < 2 || tau_max <= 0.0) throw GridError("uniform_delays: bad grid parameters");
  return Eigen::VectorXd::LinSpaced(n, 0.0, tau_max);
}

std::vector<int> find_peaks(const Eigen::VectorXd& psd, double rel_prominence) {
  std::vector<int> peaks;
  const auto n = psd.size();
  if (n < 3) return peaks;
  const double floor_level = rel_prominence * psd.maxCoeff();
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    if (!(psd(i) > psd(i - 1) && psd(i) >= psd(i + 1))) continue;
    // Prominence: drop to the highest saddle separating this peak from
    // higher terrain (or the edge) on each side.
    double left_min = psd(i);
    for (Eigen::Index j = i; j-- > 0;) {
      left_min = std::min(left_min, psd(j));
      if (psd(j) > psd(i)) break;
    }
    double right_min = psd(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      right_min = std::min(right_min, psd(j));
      if (psd(j) > psd(i)) break;
    }
    const double prominence = psd(i) - std::max(left_min, right_min);
    if (prominence > floor_level) peaks.push_back(int(i));
  }
  return peaks;
}

}  // namespace tprf
