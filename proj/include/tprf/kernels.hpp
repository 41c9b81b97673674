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
#ifndef TPRF_KERNELS_HPP
#define TPRF_KERNELS_HPP

#include <complex>
#include <cstddef>

namespace tprf::kernels {

using cxd = std::complex<double>;

// Dense complex kernels over packed column-major arrays. These back the
// matrix-exponential squaring and the correlation-delay matvec loops.
// Dispatched entry points pick an AVX2 backend at runtime when the CPU
// supports it; TPRF_SIMD=scalar in the environment forces the reference path.

// c (m x n) = a (m x k) * b (k x n)
void matmul(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
            const cxd* b, cxd* c);
// y (m) = a (m x n) * x (n)
void matvec(std::size_t m, std::size_t n, const cxd* a, const cxd* x, cxd* y);
// sum_i conj(x[i]) * y[i]
cxd dotc(std::size_t n, const cxd* x, const cxd* y);

// Name of the backend the dispatched entry points use: "avx2" or "scalar".
const char* active_backend();

// Reference implementations, always available; the equivalence tests compare
// the dispatched kernels against these.
namespace scalar {
void matmul(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
            const cxd* b, cxd* c);
void matvec(std::size_t m, std::size_t n, const cxd* a, const cxd* x, cxd* y);
cxd dotc(std::size_t n, const cxd* x, const cxd* y);
}  // namespace scalar

#ifdef TPRF_WITH_AVX2
namespace avx2 {
void matmul(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
            const cxd* b, cxd* c);
void matvec(std::size_t m, std::size_t n, const cxd* a, const cxd* x, cxd* y);
cxd dotc(std::size_t n, const cxd* x, const cxd* y);
}  // namespace avx2
#endif

}  // namespace tprf::kernels

#endif  // TPRF_KERNELS_HPP
