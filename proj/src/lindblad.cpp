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
#include "tprf/lindblad.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "tprf/expm.hpp"

namespace tprf {

Vector vectorize(const Matrix& rho) {
  return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix unvectorize(const Vector& v) {
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (dim * dim != v.size())
    throw ShapeError("unvectorize: length is not a perfect square");
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Matrix dissipator_apply(const Matrix& a, const Matrix& rho) {
  if (a.rows() != a.cols() || rho.rows() != rho.cols() ||
      a.rows() != rho.rows())
    throw ShapeError("dissipator_apply: operands must be square, same dim");
  const Matrix ada = a.adjoint() * a;
  return a * rho * a.adjoint() - 0.5 * (ada * rho + rho * ada);
}

Matrix liouvillian_matrix(
    const Matrix& h, const std::vector<std::pair<double, Matrix>>& collapse) {
  if (h.rows() != h.cols()) throw ShapeError("liouvillian_matrix: H not square");
  const auto n = h.rows();
  const Matrix id = Matrix::Identity(n, n);
  const cxd im(0.0, 1.0);
  Matrix liou = -im * (Eigen::kroneckerProduct(id, h).eval() -
                       Eigen::kroneckerProduct(h.transpose(), id).eval());
  for (const auto& [rate, a] : collapse) {
    if (rate < 0.0)
      throw InvalidRateError("liouvillian_matrix: negative collapse rate");
    if (a.rows() != n || a.cols() != n)
      throw ShapeError("liouvillian_matrix: collapse operator dim mismatch");
    const Matrix ada = a.adjoint() * a;
    liou += rate * (Eigen::kroneckerProduct(a.conjugate(), a).eval() -
                    0.5 * Eigen::kroneckerProduct(id, ada).eval() -
                    0.5 * Eigen::kroneckerProduct(ada.transpose(), id).eval());
  }
  return liou;
}

Matrix steady_state(const Matrix& liou) {
  if (liou.rows() != liou.cols())
    throw ShapeError("steady_state: superoperator not square");
  Eigen::BDCSVD<Matrix> svd(liou, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const auto last = sv.size() - 1;
  const double scale = sv(0);
  if (last >= 1 && sv(last - 1) <= 1e-10 * scale)
    throw NonUniqueSteadyStateError(
        "steady_state: null space dimension > 1 at tolerance (second-smallest "
        "singular value " +
        std::to_string(sv(last - 1)) + ", largest " + std::to_string(scale) +
        ")");
  Matrix rho = unvectorize(svd.matrixV().col(last));
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-14)
    throw NonUniqueSteadyStateError("steady_state: null vector is traceless");
  rho /= tr;
  check_density_matrix(rho);
  return rho;
}

Matrix propagate(const Matrix& liou, const Matrix& rho0, double t) {
  if (t < 0.0) throw InvalidTimeError("propagate: t must be nonnegative");
  if (rho0.size() * rho0.size() != liou.size())
    throw ShapeError("propagate: dimension mismatch");
  if (t == 0.0) return rho0;
  return unvectorize(kernel_apply(expm(liou * t), vectorize(rho0)));
}

void check_density_matrix(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw ShapeError("density matrix must be square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw ShapeError("density matrix not Hermitian within 1e-10");
  if (std::abs(rho.trace() - cxd(1.0, 0.0)) > 1e-10)
    throw ShapeError("density matrix trace differs from 1 beyond 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw ShapeError("density matrix has eigenvalue below -1e-9");
}

}  // namespace tprf
