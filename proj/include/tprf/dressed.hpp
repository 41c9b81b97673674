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
#ifndef TPRF_DRESSED_HPP
#define TPRF_DRESSED_HPP

#include <array>

#include "tprf/types.hpp"

namespace tprf {

/// Eigensystem of the three-level rotating-frame Hamiltonian.
///
/// Columns of `states` are the dressed states |xi_1>=|->, |xi_2>=|+~>,
/// |xi_3>=|e~> in the bare basis {|g>,|e>,|f>}. Labels follow the adiabatic
/// connection to the small-drive limit (tracked by maximum overlap along a
/// drive ramp), not raw eigenvalue sorting: the |-> / |+~> pair is
/// quasi-degenerate and sorting would flip labels across sweeps. At zero
/// drive and zero detuning the pair labels are arbitrary within the
/// degenerate g/f subspace. Each eigenvector is rephased so its
/// largest-magnitude component is real and positive.
struct DressedBasis {
  Eigen::Vector3d lambdas;   // (lambda_minus, lambda_plus, lambda_e), rad/s
  Eigen::Matrix3cd states;   // column j = |xi_j> in the bare basis
  double alpha = 0.0;        // anharmonicity recovered from the Hamiltonian
  double delta = 0.0;        // detuning recovered from the Hamiltonian

  // c_ij with |i> = sum_j c_ij |xi_j>  (bare state i expanded in dressed).
  cxd coefficient(int bare_i, int dressed_j) const {
    return std::conj(states(bare_i, dressed_j));
  }
};

enum class Line { TPRF, GE, EF };

const char* line_name(Line line);

/// One Bohr-frequency group of the decay operator.
struct LineOperator {
  Line label;
  double center_frequency;   // group center relative to the drive, rad/s
  Eigen::Matrix3cd dressed;  // matrix in the dressed basis
  Eigen::Matrix3cd bare;     // same operator rotated to the bare basis
};

// Eigensystem with the label and phase conventions above. H3 must be 3x3
// Hermitian of the driven-ladder family (alpha and delta are read off its
// diagonal).
DressedBasis diagonalize(const Eigen::Matrix3cd& h3);

// Closed forms at two-photon resonance (delta = 0), in label order:
// lambda_1 = 0, lambda_2 = (-sqrt(alpha^2+12 omega^2) - alpha)/4,
// lambda_3 = (+sqrt(alpha^2+12 omega^2) - alpha)/4.
std::array<double, 3> resonant_dressed_frequencies(double alpha, double omega);

// Partition the dressed-basis terms of the lowering operator into the three
// Bohr-frequency groups centered at {0, -alpha/2, +alpha/2}. The three bare-
// basis matrices sum to `lowering` exactly. Throws AmbiguousGroupingError if
// a non-negligible term sits farther than `grouping_tolerance` from every
// center.
std::array<LineOperator, 3> decompose(const Eigen::Matrix3cd& lowering,
                                      const DressedBasis& basis,
                                      double grouping_tolerance);

}  // namespace tprf

#endif  // TPRF_DRESSED_HPP
