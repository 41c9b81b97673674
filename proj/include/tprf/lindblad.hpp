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
#ifndef TPRF_LINDBLAD_HPP
#define TPRF_LINDBLAD_HPP

#include <utility>
#include <vector>

#include "tprf/types.hpp"

namespace tprf {

// Column-stacking vectorization: vec(rho) stacks the columns of rho, and
// superoperators act on vec(rho). vec(A X B) = (B^T kron A) vec(X).
Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v);

// Standard Lindblad dissipator D[A, rho] = A rho A' - (A'A rho + rho A'A)/2.
Matrix dissipator_apply(const Matrix& a, const Matrix& rho);

// Matrix representation of rho -> -i[H, rho] + sum_i rate_i D[A_i, rho].
Matrix liouvillian_matrix(
    const Matrix& h, const std::vector<std::pair<double, Matrix>>& collapse);

// Unique null vector of the Liouvillian, Hermitized and trace-normalized.
// Throws NonUniqueSteadyStateError when the null space is degenerate at
// tolerance.
Matrix steady_state(const Matrix& liou);

// rho(t) = unvec(exp(L t) vec(rho0)).
Matrix propagate(const Matrix& liou, const Matrix& rho0, double t);

// Density-matrix invariant check: Hermitian (1e-10), unit trace (1e-10),
// eigenvalues >= -1e-9. Throws on violation rather than clamping.
void check_density_matrix(const Matrix& rho);

}  // namespace tprf

#endif  // TPRF_LINDBLAD_HPP
