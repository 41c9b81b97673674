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
#include "tprf/ladder.hpp"

#include <cmath>

namespace tprf {

std::vector<std::string> LadderParams::validate() const {
  if (n_levels < 2 || n_levels > 4)
    throw InvalidDimensionError("n_levels must be 2, 3, or 4");
  if (gamma < 0.0) throw InvalidRateError("gamma must be nonnegative");
  if (omega < 0.0) throw InvalidRateError("omega must be nonnegative");
  std::vector<std::string> warnings;
  if (gamma == 0.0)
    warnings.push_back("gamma = 0: no dissipation, steady state undefined");
  if (alpha >= 0.0)
    warnings.push_back("alpha >= 0: outside the transmon regime (alpha < 0)");
  return warnings;
}

Matrix lowering_operator(int n_levels) {
  if (n_levels < 2)
    throw InvalidDimensionError("lowering_operator: n_levels must be >= 2");
  Matrix b = Matrix::Zero(n_levels, n_levels);
  for (int k = 1; k < n_levels; ++k) b(k - 1, k) = std::sqrt(double(k));
  return b;
}

Matrix hamiltonian(const LadderParams& params) {
  params.validate();
  const int n = params.n_levels;
  Matrix h = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    h(k, k) = -(params.delta + params.alpha / 2.0) * k +
              (params.alpha / 2.0) * k * (k - 1);
  }
  // i(omega/2)(b - b'): <k|H|k+1> = i(omega/2) sqrt(k+1), Hermitian partner
  // below the diagonal.
  for (int k = 0; k + 1 < n; ++k) {
    const double elem = params.omega / 2.0 * std::sqrt(double(k + 1));
    h(k, k + 1) = cxd(0.0, elem);
    h(k + 1, k) = cxd(0.0, -elem);
  }
  return h;
}

Matrix output_field(const LadderParams& params) {
  params.validate();
  return std::sqrt(params.gamma) * lowering_operator(params.n_levels);
}

}  // namespace tprf
