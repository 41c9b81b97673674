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

namespace tprf::kernels::scalar {

void matmul(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
            const cxd* b, cxd* c) {
  for (std::size_t j = 0; j < n; ++j) {
    cxd* cj = c + j * m;
    for (std::size_t i = 0; i < m; ++i) cj[i] = cxd(0.0, 0.0);
    for (std::size_t l = 0; l < k; ++l) {
      const cxd blj = b[l + j * k];
      if (blj == cxd(0.0, 0.0)) continue;
      const cxd* al = a + l * m;
      for (std::size_t i = 0; i < m; ++i) cj[i] += al[i] * blj;
    }
  }
}

void matvec(std::size_t m, std::size_t n, const cxd* a, const cxd* x, cxd* y) {
  for (std::size_t i = 0; i < m; ++i) y[i] = cxd(0.0, 0.0);
  for (std::size_t l = 0; l < n; ++l) {
    const cxd xl = x[l];
    if (xl == cxd(0.0, 0.0)) continue;
    const cxd* al = a + l * m;
    for (std::size_t i = 0; i < m; ++i) y[i] += al[i] * xl;
  }
}

cxd dotc(std::size_t n, const cxd* x, const cxd* y) {
  cxd acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace tprf::kernels::scalar
