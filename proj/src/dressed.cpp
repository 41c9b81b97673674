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
#include "tprf/dressed.hpp"

#include <cmath>
#include <sstream>

namespace tprf {

const char* line_name(Line line) {
  switch (line) {
    case Line::TPRF: return "TPRF";
    case Line::GE: return "GE";
    case Line::EF: return "EF";
  }
  return "?";
}

namespace {

// Rephase each column so its largest-magnitude component is real positive.
void fix_phases(Eigen::Matrix3cd& v) {
  for (int j = 0; j < 3; ++j) {
    int imax = 0;
    v.col(j).cwiseAbs().maxCoeff(&imax);
    const cxd pivot = v(imax, j);
    if (std::abs(pivot) > 0.0) v.col(j) *= std::abs(pivot) / pivot;
  }
}

}  // namespace

DressedBasis diagonalize(const Eigen::Matrix3cd& h3) {
  const double scale = std::max(h3.cwiseAbs().maxCoeff(), 1.0);
  if ((h3 - h3.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw ShapeError("diagonalize: Hamiltonian not Hermitian");

  DressedBasis basis;
  basis.delta = -0.5 * h3(2, 2).real();
  basis.alpha = h3(2, 2).real() - 2.0 * h3(1, 1).real();

  const Eigen::Matrix3cd diag = h3.diagonal().asDiagonal();
  const Eigen::Matrix3cd drive = h3 - diag;

  // Adiabatic label tracking: ramp the drive from a small value and follow
  // each eigenvector by maximum overlap. The |->/|+~> pair is quasi-
  // degenerate, so raw eigenvalue sorting is not label-stable.
  constexpr int kSteps = 48;
  Eigen::Matrix3cd prev;
  Eigen::Vector3d lambdas = Eigen::Vector3d::Zero();
  bool have_prev = false;
  for (int step = 1; step <= kSteps; ++step) {
    const double s = double(step) / kSteps;
    const Eigen::Matrix3cd h = diag + s * drive;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(h);
    const Eigen::Matrix3cd& vecs = es.eigenvectors();
    const Eigen::Vector3d& vals = es.eigenvalues();

    Eigen::Matrix3cd tracked;
    Eigen::Vector3d tvals;
    if (!have_prev) {
      // Initial labels: |e~> has maximal bare-|e> weight; of the remaining
      // pair, |-> is the one with the larger eigenvalue (at resonance
      // lambda_- = 0 > lambda_+).
      int ie = 0;
      vecs.row(1).cwiseAbs().maxCoeff(&ie);
      int pair[2], np = 0;
      for (int j = 0; j < 3; ++j)
        if (j != ie) pair[np++] = j;
      const int iminus = vals(pair[0]) >= vals(pair[1]) ? pair[0] : pair[1];
      const int iplus = iminus == pair[0] ? pair[1] : pair[0];
      tracked.col(0) = vecs.col(iminus);
      tracked.col(1) = vecs.col(iplus);
      tracked.col(2) = vecs.col(ie);
      tvals << vals(iminus), vals(iplus), vals(ie);
      have_prev = true;
    } else {
      bool used[3] = {false, false, false};
      for (int j = 0; j < 3; ++j) {
        int best = -1;
        double bestov = -1.0;
        for (int k = 0; k < 3; ++k) {
          if (used[k]) continue;
          const double ov = std::abs(prev.col(j).dot(vecs.col(k)));
          if (ov > bestov) {
            bestov = ov;
            best = k;
          }
        }
        used[best] = true;
        tracked.col(j) = vecs.col(best);
        tvals(j) = vals(best);
      }
    }
    prev = tracked;
    lambdas = tvals;
  }

  fix_phases(prev);
  basis.states = prev;
  basis.lambdas = lambdas;
  return basis;
}

std::array<double, 3> resonant_dressed_frequencies(double alpha,
                                                   double omega) {
  const double root = std::sqrt(alpha * alpha + 12.0 * omega * omega);
  return {0.0, 0.25 * (-root - alpha), 0.25 * (root - alpha)};
}

std::array<LineOperator, 3> decompose(const Eigen::Matrix3cd& lowering,
                                      const DressedBasis& basis,
                                      double grouping_tolerance) {
  const Eigen::Matrix3cd& v = basis.states;
  const Eigen::Matrix3cd b_dressed = v.adjoint() * lowering * v;
  const double centers[3] = {0.0, -basis.alpha / 2.0, basis.alpha / 2.0};
  const double bnorm = lowering.cwiseAbs().maxCoeff();

  std::array<Eigen::Matrix3cd, 3> groups = {Eigen::Matrix3cd::Zero(),
                                            Eigen::Matrix3cd::Zero(),
                                            Eigen::Matrix3cd::Zero()};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const double bohr = basis.lambdas(k) - basis.lambdas(j);
      int best = 0;
      double bestdist = std::abs(bohr - centers[0]);
      for (int g = 1; g < 3; ++g) {
        const double d = std::abs(bohr - centers[g]);
        if (d < bestdist) {
          bestdist = d;
          best = g;
        }
      }
      if (bestdist > grouping_tolerance &&
          std::abs(b_dressed(j, k)) > 1e-12 * bnorm) {
        std::ostringstream msg;
        msg << "decompose: term (" << j << "," << k << ") with element "
            << std::abs(b_dressed(j, k)) << " oscillates at "
            << angular_to_mhz(bohr) << " MHz, farther than "
            << angular_to_mhz(grouping_tolerance)
            << " MHz from every group center";
        throw AmbiguousGroupingError(msg.str());
      }
      groups[best](j, k) = b_dressed(j, k);
    }
  }

  const Line labels[3] = {Line::TPRF, Line::GE, Line::EF};
  std::array<LineOperator, 3> out;
  for (int g = 0; g < 3; ++g) {
    out[g].label = labels[g];
    out[g].center_frequency = centers[g];
    out[g].dressed = groups[g];
    out[g].bare = v * groups[g] * v.adjoint();
  }
  return out;
}

}  // namespace tprf
