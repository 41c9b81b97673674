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
#ifndef TPRF_EXPM_HPP
#define TPRF_EXPM_HPP

#include "tprf/types.hpp"

namespace tprf {

// Dense matrix exponential by scaling-and-squaring with diagonal Pade
// approximants (orders 3/5/7/9/13, 1-norm driven). Valid for general
// complex matrices; the Liouvillian may be non-normal.
Matrix expm(const Matrix& a);

// Kernel-backed products (column-major packed, runtime SIMD dispatch).
Matrix kernel_multiply(const Matrix& a, const Matrix& b);
Vector kernel_apply(const Matrix& a, const Vector& x);

}  // namespace tprf

#endif  // TPRF_EXPM_HPP
