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
#ifndef TPRF_TYPES_HPP
#define TPRF_TYPES_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tprf {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// All core quantities are angular frequencies in rad/s. Configuration files
/// and the CLI speak in ordinary frequencies ("value/2pi", MHz); this is the
/// single conversion boundary.
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline double mhz_to_angular(double f_mhz) { return two_pi * 1e6 * f_mhz; }
inline double angular_to_mhz(double w) { return w / (two_pi * 1e6); }

struct InvalidDimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidRateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidTimeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonUniqueSteadyStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StaleStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateNormalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ElasticContaminationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousGroupingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct KernelTooWideError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnderdeterminedFitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tprf

#endif  // TPRF_TYPES_HPP
