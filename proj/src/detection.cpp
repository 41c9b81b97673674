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
#include "tprf/detection.hpp"

#include <cmath>
#include <fstream>

namespace tprf {

namespace {

void normalize_dc(Eigen::VectorXd& taps) {
  const double sum = taps.sum();
  if (sum <= 0.0) throw ConfigError("filter kernel has nonpositive DC gain");
  taps /= sum;
}

// 'same' convolution of a delay trace with a centered kernel. The trace is
// mirrored at tau = 0 (g2(-tau) = g2(tau)) and edge-replicated at the far
// end, which keeps the long-delay asymptote.
Eigen::VectorXd convolve_symmetric(const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& taps) {
  const auto n = x.size();
  const auto k = taps.size();
  const auto half = (k - 1) / 2;
  Eigen::VectorXd out(n);
  auto sample = [&](Eigen::Index i) {
    if (i < 0) i = -i;                 // mirror about tau = 0
    if (i >= n) i = n - 1;             // hold the asymptote
    return x(i);
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < k; ++j) acc += taps(j) * sample(i + j - half);
    out(i) = acc;
  }
  return out;
}

}  // namespace

FilterKernel boxcar_kernel(double bandwidth_hz, double sample_period) {
  if (bandwidth_hz <= 0.0 || sample_period <= 0.0)
    throw ConfigError("boxcar_kernel: bandwidth and sample period must be > 0");
  const auto ntaps = std::max<Eigen::Index>(
      1, Eigen::Index(std::llround(1.0 / (bandwidth_hz * sample_period))));
  FilterKernel kernel;
  kernel.taps = Eigen::VectorXd::Constant(ntaps, 1.0 / double(ntaps));
  kernel.sample_period = sample_period;
  kernel.bandwidth_hint = bandwidth_hz;
  return kernel;
}

FilterKernel raised_cosine_kernel(double bandwidth_hz, double sample_period) {
  if (bandwidth_hz <= 0.0 || sample_period <= 0.0)
    throw ConfigError(
        "raised_cosine_kernel: bandwidth and sample period must be > 0");
  const auto ntaps = std::max<Eigen::Index>(
      3, Eigen::Index(std::llround(2.0 / (bandwidth_hz * sample_period))));
  FilterKernel kernel;
  kernel.taps.resize(ntaps);
  for (Eigen::Index i = 0; i < ntaps; ++i)
    kernel.taps(i) =
        0.5 * (1.0 - std::cos(two_pi * double(i) / double(ntaps - 1)));
  normalize_dc(kernel.taps);
  kernel.sample_period = sample_period;
  kernel.bandwidth_hint = bandwidth_hz;
  return kernel;
}

FilterKernel load_kernel(const std::string& path, double sample_period) {
  std::ifstream in(path);
  if (!in) throw ConfigError("load_kernel: cannot open " + path);
  std::vector<double> taps;
  double v = 0.0;
  while (in >> v) taps.push_back(v);
  if (taps.empty()) throw ConfigError("load_kernel: no taps in " + path);
  FilterKernel kernel;
  kernel.taps = Eigen::Map<Eigen::VectorXd>(taps.data(), taps.size());
  normalize_dc(kernel.taps);
  kernel.sample_period = sample_period;
  kernel.bandwidth_hint = 0.0;
  return kernel;
}

CorrelationTrace filter_g2(const CorrelationTrace& trace,
                           const FilterKernel& kernel) {
  const auto n = trace.delays.size();
  if (n < 2) throw GridError("filter_g2: trace too short");
  const double dt = trace.delays(1) - trace.delays(0);
  for (Eigen::Index i = 1; i < n; ++i)
    if (std::abs(trace.delays(i) - trace.delays(i - 1) - dt) > 1e-9 * dt)
      throw GridError("filter_g2: delay grid is not uniform");

  // Resample the kernel onto the trace grid when it is sampled finer.
  const double ratio = dt / kernel.sample_period;
  const auto r = Eigen::Index(std::llround(ratio));
  if (r < 1 || std::abs(ratio - double(r)) > 1e-9)
    throw GridError(
        "filter_g2: kernel sample period must divide the trace step");
  Eigen::VectorXd taps;
  if (r == 1) {
    taps = kernel.taps;
  } else {
    const auto m = (kernel.taps.size() + r - 1) / r;
    taps = Eigen::VectorXd::Zero(m);
    for (Eigen::Index i = 0; i < kernel.taps.size(); ++i)
      taps(i / r) += kernel.taps(i);
  }

  if (taps.size() > n / 2)
    throw KernelTooWideError("filter_g2: kernel wider than half the trace");

  // Squared kernel, renormalized, applied twice (low-SNR power-detection
  // approximation).
  Eigen::VectorXd squared = taps.array().square();
  normalize_dc(squared);

  CorrelationTrace out;
  out.delays = trace.delays;
  out.normalized = trace.normalized;
  Eigen::VectorXd values = trace.real_values();
  values = convolve_symmetric(values, squared);
  values = convolve_symmetric(values, squared);
  out.values = values.cast<cxd>();
  return out;
}

double omega_from_power(double p_in_watt, const PowerCalibration& cal) {
  if (p_in_watt < 0.0)
    throw InvalidRateError("omega_from_power: negative input power");
  return cal.k *
         std::sqrt(p_in_watt *
                   std::pow(10.0, -cal.reference_attenuation_db / 10.0));
}

PowerCalibration fit_calibration(
    const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw UnderdeterminedFitError("fit_calibration: need at least 2 points");
  bool distinct = false;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].first != points[0].first) distinct = true;
  if (!distinct)
    throw UnderdeterminedFitError("fit_calibration: powers are identical");

  double sxy = 0.0, sxx = 0.0;
  for (const auto& [p, omega] : points) {
    if (p < 0.0) throw ConfigError("fit_calibration: negative power");
    const double x = std::sqrt(p);
    sxy += x * omega;
    sxx += x * x;
  }
  PowerCalibration cal;
  cal.k = sxy / sxx;
  cal.reference_attenuation_db = 0.0;
  double resid2 = 0.0;
  for (const auto& [p, omega] : points) {
    const double r = omega - cal.k * std::sqrt(p);
    resid2 += r * r;
  }
  cal.residual_norm = std::sqrt(resid2);
  return cal;
}

}  // namespace tprf
