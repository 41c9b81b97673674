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
#include "tprf/expm.hpp"

#include <array>
#include <cmath>

#include "tprf/kernels.hpp"

namespace tprf {

Matrix kernel_multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("kernel_multiply: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  kernels::matmul(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

Vector kernel_apply(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw ShapeError("kernel_apply: dimension mismatch");
  Vector y(a.rows());
  kernels::matvec(a.rows(), a.cols(), a.data(), x.data(), y.data());
  return y;
}

namespace {

// Pade coefficient tables and 1-norm thresholds from Higham's scaling-and-
// squaring analysis (double precision).
constexpr std::array<double, 4> kB3 = {120, 60, 12, 1};
constexpr std::array<double, 6> kB5 = {30240, 15120, 3360, 420, 30, 1};
constexpr std::array<double, 8> kB7 = {17297280, 8648640, 1995840, 277200,
                                       25200,    1512,    56,      1};
constexpr std::array<double, 10> kB9 = {17643225600., 8821612800., 2075673600.,
                                        302702400.,   30270240.,   2162160.,
                                        110880.,      3960.,       90.,
                                        1.};
constexpr std::array<double, 14> kB13 = {
    64764752532480000., 32382376266240000., 7771770303897600.,
    1187353796428800.,  129060195264000.,   10559470521600.,
    670442572800.,      33522128640.,       1323241920.,
    40840800.,          960960.,            16380.,
    182.,               1.};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

Matrix pade_solve(const Matrix& u, const Matrix& v) {
  // r = (v - u)^{-1} (v + u)
  return (v - u).partialPivLu().solve(v + u);
}

template <std::size_t N>
Matrix pade_low(const Matrix& a, const std::array<double, N>& b) {
  const auto n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = kernel_multiply(a, a);
  Matrix even = b[0] * id;
  Matrix odd = b[1] * id;
  Matrix pow = id;
  for (std::size_t k = 2; k + 1 < N + 1; k += 2) {
    pow = kernel_multiply(pow, a2);
    even += b[k] * pow;
    if (k + 1 < N) odd += b[k + 1] * pow;
  }
  const Matrix u = kernel_multiply(a, odd);
  return pade_solve(u, even);
}

Matrix pade13(const Matrix& a) {
  const auto n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = kernel_multiply(a, a);
  const Matrix a4 = kernel_multiply(a2, a2);
  const Matrix a6 = kernel_multiply(a2, a4);
  const Matrix u =
      kernel_multiply(a, kernel_multiply(a6, kB13[13] * a6 + kB13[11] * a4 +
                                                  kB13[9] * a2) +
                             kB13[7] * a6 + kB13[5] * a4 + kB13[3] * a2 +
                             kB13[1] * id);
  const Matrix v = kernel_multiply(a6, kB13[12] * a6 + kB13[10] * a4 +
                                           kB13[8] * a2) +
                   kB13[6] * a6 + kB13[4] * a4 + kB13[2] * a2 + kB13[0] * id;
  return pade_solve(u, v);
}

}  // namespace

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("expm: matrix must be square");
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 <= kTheta3) return pade_low(a, kB3);
  if (norm1 <= kTheta5) return pade_low(a, kB5);
  if (norm1 <= kTheta7) return pade_low(a, kB7);
  if (norm1 <= kTheta9) return pade_low(a, kB9);
  int s = 0;
  Matrix scaled = a;
  if (norm1 > kTheta13) {
    s = int(std::ceil(std::log2(norm1 / kTheta13)));
    scaled *= std::ldexp(1.0, -s);
  }
  Matrix r = pade13(scaled);
  for (int i = 0; i < s; ++i) r = kernel_multiply(r, r);
  return r;
}

}  // namespace tprf
