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
#include "tprf/kernels.hpp"

#ifdef TPRF_WITH_AVX2

#include <immintrin.h>

namespace tprf::kernels::avx2 {

namespace {

// y[i] += x[i] * alpha over m complex doubles, 2 complex per 256-bit lane.
inline void axpy(std::size_t m, cxd alpha, const cxd* x, cxd* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xs = _mm256_permute_pd(xv, 0x5);  // swap re/im pairs
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    // (xr*ar - xi*ai, xi*ar + xr*ai)
    const __m256d prod = _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(xs, ai));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, prod));
  }
  for (; i < m; ++i) y[i] += x[i] * alpha;
}

}  // namespace

void matmul(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
            const cxd* b, cxd* c) {
  for (std::size_t j = 0; j < n; ++j) {
    cxd* cj = c + j * m;
    for (std::size_t i = 0; i < m; ++i) cj[i] = cxd(0.0, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const cxd blj = b[l + j * k];
      if (blj == cxd(0.0, 0.0)) continue;
      axpy(m, blj, a + l * m, cj);
    }
  }
}

void matvec(std::size_t m, std::size_t n, const cxd* a, const cxd* x, cxd* y) {
  for (std::size_t i = 0; i < m; ++i) y[i] = cxd(0.0, 0.0);
  for (std::size_t l = 0; l < n; ++l) {
    const cxd xl = x[l];
    if (xl == cxd(0.0, 0.0)) continue;
    axpy(m, xl, a + l * m, y);
  }
}

cxd dotc(std::size_t n, const cxd* x, const cxd* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d xs = _mm256_permute_pd(xv, 0x5);
    re = _mm256_fmadd_pd(xv, yv, re);  // pairs (xr*yr, xi*yi)
    im = _mm256_fmadd_pd(xs, yv, im);  // pairs (xi*yr, xr*yi)
  }
  alignas(32) double rbuf[4], ibuf[4];
  _mm256_store_pd(rbuf, re);
  _mm256_store_pd(ibuf, im);
  // conj(x)*y: re = xr*yr + xi*yi, im = xr*yi - xi*yr
  double racc = rbuf[0] + rbuf[1] + rbuf[2] + rbuf[3];
  double iacc = (ibuf[1] - ibuf[0]) + (ibuf[3] - ibuf[2]);
  for (; i < n; ++i) {
    const cxd t = std::conj(x[i]) * y[i];
    racc += t.real();
    iacc += t.imag();
  }
  return {racc, iacc};
}

}  // namespace tprf::kernels::avx2

#endif  // TPRF_WITH_AVX2
