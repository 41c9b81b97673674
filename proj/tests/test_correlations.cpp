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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tprf/analytic.hpp"
#include "tprf/correlations.hpp"
#include "tprf/dressed.hpp"
#include "tprf/expm.hpp"
#include "tprf/ladder.hpp"
#include "tprf/lindblad.hpp"

using tprf::cxd;
using tprf::CorrelationTrace;
using tprf::LadderParams;
using tprf::Matrix;
using tprf::mhz_to_angular;
using tprf::Spectrum;

namespace {

struct System {
  LadderParams params;
  Matrix liou;
  Matrix rho_st;
  Matrix b;
};

System make_system(int n_levels, double omega_mhz, double delta_mhz = 0.0,
                   double alpha_mhz = -233.0, double gamma_mhz = 2.5) {
  System s;
  s.params.n_levels = n_levels;
  s.params.alpha = mhz_to_angular(alpha_mhz);
  s.params.delta = mhz_to_angular(delta_mhz);
  s.params.omega = mhz_to_angular(omega_mhz);
  s.params.gamma = mhz_to_angular(gamma_mhz);
  s.b = tprf::lowering_operator(n_levels);
  s.liou = tprf::liouvillian_matrix(tprf::hamiltonian(s.params),
                                    {{s.params.gamma, s.b}});
  s.rho_st = tprf::steady_state(s.liou);
  return s;
}

// Resonant two-level drive: cancels the rotating-frame diagonal for |e>.
System make_two_level(double omega_mhz) {
  LadderParams ref;
  return make_system(2, omega_mhz, 233.0 / 2.0);
}

Matrix line_field(const System& s, tprf::Line which) {
  const tprf::DressedBasis basis =
      tprf::diagonalize(tprf::hamiltonian(s.params));
  const auto lines = tprf::decompose(s.b, basis, std::abs(s.params.alpha) / 4.0);
  for (const auto& line : lines)
    if (line.label == which)
      return std::sqrt(s.params.gamma) * Matrix(line.bare);
  throw std::logic_error("line not found");
}

double integrate(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  double acc = 0.0;
  for (Eigen::Index i = 1; i < x.size(); ++i)
    acc += 0.5 * (y(i) + y(i - 1)) * (x(i) - x(i - 1));
  return acc;
}

}  // namespace

TEST_CASE("vacuum emits nothing") {
  const System s = make_system(3, 0.0);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 64);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, s.b, delays);
  CHECK(g1.values.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("g1(0) is the excited population for a two-level emitter") {
  const System s = make_two_level(10.0);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 64);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, s.b, delays);
  CHECK(g1.values(0).real() ==
        doctest::Approx(s.rho_st(1, 1).real()).epsilon(1e-10));
  CHECK(std::abs(g1.values(0).imag()) <= 1e-12);
}

TEST_CASE("stale steady state is rejected") {
  const System s = make_system(3, 40.0);
  Matrix wrong = Matrix::Zero(3, 3);
  wrong(1, 1) = 1.0;
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 16);
  CHECK_THROWS_AS(tprf::correlation_g1(s.liou, wrong, s.b, delays),
                  tprf::StaleStateError);
}

TEST_CASE("two-photon-line flux matches the closed form at eps = 0.1") {
  const System s = make_system(3, 23.3);  // eps = 0.1
  const Matrix field = line_field(s, tprf::Line::TPRF);
  const double flux = tprf::steady_flux(s.rho_st, field);
  const tprf::AnalyticFlux expected = tprf::analytic_flux(
      {0.1, s.params.gamma / std::abs(s.params.alpha)}, s.params.gamma);
  CHECK(std::abs(flux - expected.value) <= 0.05 * expected.value);
}

TEST_CASE("quantum regression equals explicit two-step propagation") {
  const System s = make_system(3, 40.0);
  const Matrix field = std::sqrt(s.params.gamma) * s.b;
  const auto delays = tprf::uniform_delays(5.0 / s.params.gamma, 33);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, field, delays);
  // Independent path: evolve F rho_st sample by sample with fresh
  // exponentials and trace against F'.
  for (Eigen::Index i = 0; i < delays.size(); i += 8) {
    const Matrix evolved = tprf::unvectorize(
        tprf::kernel_apply(tprf::expm(s.liou * delays(i)),
                           tprf::vectorize(field * s.rho_st)));
    const cxd direct = (field.adjoint() * evolved).trace();
    CHECK(std::abs(direct - g1.values(i)) <=
          1e-10 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("two-level resonance fluorescence is perfectly antibunched") {
  const System s = make_two_level(20.0);
  const Matrix field = std::sqrt(s.params.gamma) * s.b;
  CHECK(tprf::g2_zero(s.rho_st, field) == 0.0);  // b^2 = 0 exactly
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 512);
  const auto g2 = tprf::correlation_g2(s.liou, s.rho_st, field, delays, true);
  CHECK(g2.values(0).real() == 0.0);
}

TEST_CASE("normalized g2 decorrelates at long delay") {
  for (double omega_mhz : {20.0, 40.0}) {
    const System s = make_system(3, omega_mhz);
    const Matrix field = std::sqrt(s.params.gamma) * s.b;
    const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 1024);
    const auto g2 =
        tprf::correlation_g2(s.liou, s.rho_st, field, delays, true);
    CHECK(std::abs(g2.values(delays.size() - 1).real() - 1.0) <= 0.01);
    CHECK(std::abs(g2.values(delays.size() - 1).imag()) <= 1e-9);
  }
}

TEST_CASE("normalization rejects zero flux") {
  const System s = make_system(3, 0.0);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 16);
  CHECK_THROWS_AS(
      tprf::correlation_g2(s.liou, s.rho_st, s.b, delays, true),
      tprf::DegenerateNormalizationError);
}

TEST_CASE("two-photon g2(0) near the predicted maximum") {
  const double alpha = mhz_to_angular(-233.0);
  const double gamma = mhz_to_angular(2.5);
  const tprf::G2MaxPoint star = tprf::g2max_point(alpha, gamma);
  // argmax of the closed form: 0.5367 sqrt(|alpha| Gamma)
  CHECK(star.omega_star / std::sqrt(std::abs(alpha) * gamma) ==
        doctest::Approx(0.5367).epsilon(1e-3));
  const System s = make_system(3, tprf::angular_to_mhz(star.omega_star));
  const Matrix field = line_field(s, tprf::Line::TPRF);
  CHECK(tprf::g2_zero(s.rho_st, field) ==
        doctest::Approx(2.831).epsilon(0.03));
}

TEST_CASE("Mollow sidebands sit at +/- Omega") {
  const System s = make_two_level(20.0);
  const Matrix field = std::sqrt(s.params.gamma) * s.b;
  const Matrix dfield = tprf::fluctuation_operator(field, s.rho_st);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 4096);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, dfield, delays);
  const Spectrum spec =
      tprf::power_spectrum(g1, tprf::steady_mean(s.rho_st, dfield));

  const auto peaks = tprf::find_peaks(spec.psd, 1e-3);
  REQUIRE(peaks.size() == 3);
  const double bin = spec.frequencies(1) - spec.frequencies(0);
  CHECK(std::abs(spec.frequencies(peaks[0]) + s.params.omega) <= bin);
  CHECK(std::abs(spec.frequencies(peaks[1])) <= bin);
  CHECK(std::abs(spec.frequencies(peaks[2]) - s.params.omega) <= bin);
}

TEST_CASE("spectrum positivity and Parseval consistency") {
  const System s = make_system(3, 40.0);
  const Matrix field = std::sqrt(s.params.gamma) * s.b;
  const Matrix dfield = tprf::fluctuation_operator(field, s.rho_st);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 4096);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, dfield, delays);
  const Spectrum spec =
      tprf::power_spectrum(g1, tprf::steady_mean(s.rho_st, dfield));

  CHECK(spec.psd.minCoeff() >= -1e-9 * spec.psd.maxCoeff());
  const double integral = integrate(spec.frequencies, spec.psd) / tprf::two_pi;
  const double flux = tprf::steady_flux(s.rho_st, dfield);
  CHECK(std::abs(integral - flux) <= 0.01 * flux);
}

TEST_CASE("elastic contamination is detected") {
  const System s = make_system(3, 40.0);
  const Matrix field = std::sqrt(s.params.gamma) * s.b;  // mean not subtracted
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 256);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, field, delays);
  CHECK_THROWS_AS(
      tprf::power_spectrum(g1, tprf::steady_mean(s.rho_st, field)),
      tprf::ElasticContaminationError);
}

TEST_CASE("non-uniform delay grids are rejected by the spectrum") {
  CorrelationTrace trace;
  trace.delays.resize(8);
  trace.delays << 0, 1, 2, 3, 4, 5, 6, 8;
  trace.values = tprf::Vector::Zero(8);
  CHECK_THROWS_AS(tprf::power_spectrum(trace, 0.0), tprf::GridError);
}

TEST_CASE("zero input trace gives a zero spectrum") {
  CorrelationTrace trace;
  trace.delays = tprf::uniform_delays(1.0, 64);
  trace.values = tprf::Vector::Zero(64);
  const Spectrum spec = tprf::power_spectrum(trace, 0.0);
  CHECK(spec.psd.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("seven inelastic peaks at strong two-photon drive") {
  // eps ~ 0.3: doublets near +/-|alpha|/2 and a central triplet
  const System s = make_system(3, 0.3 * 233.0);
  const Matrix field = std::sqrt(s.params.gamma) * s.b;
  const Matrix dfield = tprf::fluctuation_operator(field, s.rho_st);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 4096);
  const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, dfield, delays);
  const Spectrum spec =
      tprf::power_spectrum(g1, tprf::steady_mean(s.rho_st, dfield));
  const auto peaks = tprf::find_peaks(spec.psd, 1e-3);

  const double half_alpha = std::abs(s.params.alpha) / 2.0;
  int near_plus = 0, near_minus = 0, central = 0;
  for (int idx : peaks) {
    const double f = spec.frequencies(idx);
    if (std::abs(f - half_alpha) < half_alpha / 2.0)
      ++near_plus;
    else if (std::abs(f + half_alpha) < half_alpha / 2.0)
      ++near_minus;
    else if (std::abs(f) < half_alpha / 2.0)
      ++central;
  }
  CHECK(peaks.size() == 7);
  CHECK(near_plus == 2);
  CHECK(near_minus == 2);
  CHECK(central == 3);
}

TEST_CASE("line-resolved spectra sum to the full spectrum") {
  for (double eps : {0.10, 0.20, 0.25}) {
    const System s = make_system(3, eps * 233.0);
    const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 4096);

    auto psd_for = [&](const Matrix& field) {
      const Matrix dfield = tprf::fluctuation_operator(field, s.rho_st);
      const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, dfield, delays);
      return tprf::power_spectrum(g1, tprf::steady_mean(s.rho_st, dfield));
    };

    const Spectrum full = psd_for(std::sqrt(s.params.gamma) * s.b);
    const Spectrum tp = psd_for(line_field(s, tprf::Line::TPRF));
    const Spectrum ge = psd_for(line_field(s, tprf::Line::GE));
    const Spectrum ef = psd_for(line_field(s, tprf::Line::EF));

    const Eigen::VectorXd sum = tp.psd + ge.psd + ef.psd;
    const double total = integrate(full.frequencies, full.psd);
    const double summed = integrate(full.frequencies, sum);
    // Net power matches tightly; the pointwise residue carries the secular
    // cross terms, a few percent that redistribute without adding power.
    CHECK(std::abs(summed - total) <= 0.02 * total);
    const double l1 =
        integrate(full.frequencies, (sum - full.psd).cwiseAbs());
    CHECK(l1 <= 0.06 * total);
  }
}

TEST_CASE("TPRF operator alone reproduces the spectrum near the drive") {
  const System s = make_system(3, 40.0);
  const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 4096);
  auto psd_for = [&](const Matrix& field) {
    const Matrix dfield = tprf::fluctuation_operator(field, s.rho_st);
    const auto g1 = tprf::correlation_g1(s.liou, s.rho_st, dfield, delays);
    return tprf::power_spectrum(g1, tprf::steady_mean(s.rho_st, dfield));
  };
  const Spectrum full = psd_for(std::sqrt(s.params.gamma) * s.b);
  const Spectrum tp = psd_for(line_field(s, tprf::Line::TPRF));

  const double band = mhz_to_angular(40.0);
  double l1 = 0.0, total = 0.0;
  for (Eigen::Index i = 1; i < full.frequencies.size(); ++i) {
    if (std::abs(full.frequencies(i)) > band) continue;
    const double dw = full.frequencies(i) - full.frequencies(i - 1);
    l1 += std::abs(tp.psd(i) - full.psd(i)) * dw;
    total += full.psd(i) * dw;
  }
  CHECK(l1 <= 0.05 * total);
}

TEST_CASE("g-e line is antibunched and its dip shortens with drive") {
  double previous_half_time = 1e9;
  for (double eps : {0.10, 0.15, 0.20}) {
    const System s = make_system(3, eps * 233.0);
    const Matrix field = line_field(s, tprf::Line::GE);
    CHECK(tprf::g2_zero(s.rho_st, field) < 0.2);

    const auto delays = tprf::uniform_delays(20.0 / s.params.gamma, 2048);
    const auto g2 =
        tprf::correlation_g2(s.liou, s.rho_st, field, delays, true);
    const double g20 = g2.values(0).real();
    const double target = 0.5 * (g20 + 1.0);
    double half_time = delays(delays.size() - 1);
    for (Eigen::Index i = 0; i < delays.size(); ++i) {
      if (g2.values(i).real() >= target) {
        half_time = delays(i);
        break;
      }
    }
    CHECK(half_time < previous_half_time);
    previous_half_time = half_time;
  }
}

TEST_CASE("TPRF g2(0) decays toward Poissonian beyond the maximum") {
  const double omega_star_mhz = 0.5367 * std::sqrt(233.0 * 2.5);
  double previous = 1e9;
  for (double scale : {1.5, 3.0, 5.0}) {
    const System s = make_system(3, scale * omega_star_mhz);
    const double g2 = tprf::g2_zero(s.rho_st, line_field(s, tprf::Line::TPRF));
    CHECK(g2 < previous);
    previous = g2;
  }
  CHECK(previous > 1.0);  // still super-Poissonian from above
}
