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

#include <cstdlib>
#include <cstring>

namespace tprf::kernels {

namespace {

struct Backend {
  void (*matmul)(std::size_t, std::size_t, std::size_t, const cxd*, const cxd*,
                 cxd*);
  void (*matvec)(std::size_t, std::size_t, const cxd*, const cxd*, cxd*);
  cxd (*dotc)(std::size_t, const cxd*, const cxd*);
  const char* name;
};

Backend select_backend() {
  const char* force = std::getenv("TPRF_SIMD");
  const bool want_scalar = force != nullptr && std::strcmp(force, "scalar") == 0;
#ifdef TPRF_WITH_AVX2
  if (!want_scalar && __builtin_cpu_supports("avx2") &&
      __builtin_cpu_supports("fma")) {
    return {avx2::matmul, avx2::matvec, avx2::dotc, "avx2"};
  }
#else
  (void)want_scalar;
#endif
  return {scalar::matmul, scalar::matvec, scalar::dotc, "scalar"};
}

const Backend& backend() {
  static const Backend b = select_backend();
  return b;
}

}  // namespace

void matmul(std::size_t m, std::size_t k, std::size_t n, const cxd* a,
            const cxd* b, cxd* c) {
  backend().matmul(m, k, n, a, b, c);
}

void matvec(std::size_t m, std::size_t n, const cxd* a, const cxd* x, cxd* y) {
  backend().matvec(m, n, a, x, y);
}

cxd dotc(std::size_t n, const cxd* x, const cxd* y) {
  return backend().dotc(n, x, y);
}

const char* active_backend() { return backend().name; }

}  // namespace tprf::kernels
