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
#ifndef TPRF_LADDER_HPP
#define TPRF_LADDER_HPP

#include <vector>

#include "tprf/types.hpp"

namespace tprf {

/// Physical configuration of the driven ladder emitter. All frequencies are
/// angular (rad/s). Basis ordering is fixed: 0 = |g>, 1 = |e>, 2 = |f>,
/// 3 = |h>.
struct LadderParams {
  int n_levels = 3;    // 2, 3, or 4
  double alpha = 0.0;  // anharmonicity, negative for the physical device
  double delta = 0.0;  // drive detuning from the two-photon resonance
  double omega = 0.0;  // drive strength, >= 0
  double gamma = 0.0;  // radiative decay rate, > 0

  // Throws on hard violations; returns warnings (e.g. alpha >= 0) without
  // failing, so exploratory parameter scans stay possible.
  std::vector<std::string> validate() const;
};

// Truncated lowering operator: entry (k-1, k) = sqrt(k), k = 1..n-1.
Matrix lowering_operator(int n_levels);

// Rotating-frame Hamiltonian
//   H = -(delta + alpha/2) b'b + (alpha/2) b'b'bb + i(omega/2)(b - b').
Matrix hamiltonian(const LadderParams& params);

// Output-field operator b_out = sqrt(gamma) * b.
Matrix output_field(const LadderParams& params);

}  // namespace tprf

#endif  // TPRF_LADDER_HPP
