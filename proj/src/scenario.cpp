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
#include "tprf/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include "tprf/analytic.hpp"
#include "tprf/correlations.hpp"
#include "tprf/detection.hpp"
#include "tprf/dressed.hpp"
#include "tprf/lindblad.hpp"

namespace tprf {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const json& require(const json& j, const std::string& key,
                    const std::string& path) {
  if (!j.contains(key))
    throw ConfigError(path + "." + key + ": missing required field");
  return j.at(key);
}

double require_number(const json& j, const std::string& key,
                      const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number())
    throw ConfigError(path + "." + key + ": expected a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback,
                 const std::string& path) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number())
    throw ConfigError(path + "." + key + ": expected a number");
  return j.at(key).get<double>();
}

Task parse_task(const std::string& s) {
  if (s == "spectrum") return Task::Spectrum;
  if (s == "g2") return Task::G2;
  if (s == "sweep-omega") return Task::SweepOmega;
  if (s == "sweep-delta") return Task::SweepDelta;
  if (s == "validate") return Task::Validate;
  throw ConfigError("task: unknown task '" + s + "'");
}

LineSelect parse_line(const std::string& s) {
  if (s == "FULL") return LineSelect::Full;
  if (s == "TPRF") return LineSelect::TPRF;
  if (s == "GE") return LineSelect::GE;
  if (s == "EF") return LineSelect::EF;
  throw ConfigError("line: must be one of FULL, TPRF, GE, EF");
}

// Field operator for the selected line, already scaled by sqrt(gamma).
Matrix select_field(const Scenario& s) {
  const Matrix b = lowering_operator(s.params.n_levels);
  if (s.line == LineSelect::Full) return std::sqrt(s.params.gamma) * b;
  const DressedBasis basis = diagonalize(hamiltonian(s.params));
  const auto lines =
      decompose(b, basis, std::abs(s.params.alpha) / 4.0);
  const Line want = s.line == LineSelect::TPRF ? Line::TPRF
                    : s.line == LineSelect::GE ? Line::GE
                                               : Line::EF;
  for (const auto& line : lines)
    if (line.label == want)
      return std::sqrt(s.params.gamma) * Matrix(line.bare);
  throw ConfigError("line: operator not found");  // unreachable
}

struct SweepRow {
  double value;
  double flux_over_gamma;
  double g2zero;
};

SweepRow evaluate_sweep_point(const Scenario& s, double value) {
  LadderParams p = s.params;
  if (s.task == Task::SweepOmega)
    p.omega = mhz_to_angular(value);
  else
    p.delta = value * p.gamma;
  const Matrix b = lowering_operator(p.n_levels);
  const Matrix liou =
      liouvillian_matrix(hamiltonian(p), {{p.gamma, b}});
  const Matrix rho = steady_state(liou);
  const DressedBasis basis = diagonalize(hamiltonian(p));
  const auto lines = decompose(b, basis, std::abs(p.alpha) / 4.0);
  const Matrix field = std::sqrt(p.gamma) * Matrix(lines[0].bare);  // TPRF
  SweepRow row;
  row.value = value;
  row.flux_over_gamma = steady_flux(rho, field) / p.gamma;
  row.g2zero = g2_zero(rho, field);
  return row;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + path);
  out << body;
}

ordered_json params_echo(const LadderParams& p) {
  ordered_json j;
  j["n_levels"] = p.n_levels;
  j["alpha_mhz"] = angular_to_mhz(p.alpha);
  j["delta_mhz"] = angular_to_mhz(p.delta);
  j["omega_mhz"] = angular_to_mhz(p.omega);
  j["gamma_mhz"] = angular_to_mhz(p.gamma);
  return j;
}

}  // namespace

const char* task_name(Task t) {
  switch (t) {
    case Task::Spectrum: return "spectrum";
    case Task::G2: return "g2";
    case Task::SweepOmega: return "sweep-omega";
    case Task::SweepDelta: return "sweep-delta";
    case Task::Validate: return "validate";
  }
  return "?";
}

Scenario parse_scenario(const json& config, const std::string& task_override) {
  Scenario s;
  if (!config.is_object()) throw ConfigError(": config must be a JSON object");

  const json& p = require(config, "params", "");
  const double nl = require_number(p, "n_levels", "params");
  if (nl != std::floor(nl) || nl < 2 || nl > 4)
    throw ConfigError("params.n_levels: must be 2, 3, or 4");
  s.params.n_levels = int(nl);
  s.params.alpha = mhz_to_angular(require_number(p, "alpha_mhz", "params"));
  s.params.delta = mhz_to_angular(number_or(p, "delta_mhz", 0.0, "params"));
  s.params.gamma = mhz_to_angular(require_number(p, "gamma_mhz", "params"));
  if (s.params.gamma <= 0.0)
    throw ConfigError("params.gamma_mhz: must be positive");

  if (p.contains("omega_mhz")) {
    s.params.omega = mhz_to_angular(require_number(p, "omega_mhz", "params"));
  } else if (p.contains("p_in_watt")) {
    if (!config.contains("calibration"))
      throw ConfigError("calibration: required when params.p_in_watt is used");
    const json& c = config.at("calibration");
    PowerCalibration cal;
    cal.k = require_number(c, "k", "calibration");
    cal.reference_attenuation_db =
        number_or(c, "attenuation_db", 0.0, "calibration");
    if (cal.k <= 0.0) throw ConfigError("calibration.k: must be positive");
    const double p_in = require_number(p, "p_in_watt", "params");
    if (p_in < 0.0) throw ConfigError("params.p_in_watt: must be nonnegative");
    s.params.omega = omega_from_power(p_in, cal);
  } else {
    throw ConfigError("params.omega_mhz: missing (or provide p_in_watt with a calibration)");
  }
  if (s.params.omega < 0.0)
    throw ConfigError("params.omega_mhz: must be nonnegative");

  std::string task_str;
  if (config.contains("task")) task_str = config.at("task").get<std::string>();
  if (!task_override.empty()) {
    if (!task_str.empty() && task_str != task_override &&
        // the sweep subcommand covers both sweep tasks
        !(task_override == "sweep" &&
          (task_str == "sweep-omega" || task_str == "sweep-delta")))
      throw ConfigError("task: config says '" + task_str +
                        "' but the subcommand is '" + task_override + "'");
    if (task_str.empty()) {
      if (task_override == "sweep")
        throw ConfigError(
            "task: the sweep subcommand needs task = sweep-omega or "
            "sweep-delta in the config");
      task_str = task_override;
    }
  }
  if (task_str.empty()) throw ConfigError("task: missing");
  s.task = parse_task(task_str);

  if (config.contains("line"))
    s.line = parse_line(config.at("line").get<std::string>());
  if (s.line != LineSelect::Full && s.params.n_levels != 3)
    throw ConfigError("line: TPRF/GE/EF line operators require n_levels = 3");

  if (config.contains("grids")) {
    const json& g = config.at("grids");
    s.tau_max_over_gamma =
        number_or(g, "tau_max_over_gamma", s.tau_max_over_gamma, "grids");
    const double ntau = number_or(g, "n_tau", s.n_tau, "grids");
    if (ntau < 4 || ntau != std::floor(ntau))
      throw ConfigError("grids.n_tau: must be an integer >= 4");
    s.n_tau = int(ntau);
    if (s.tau_max_over_gamma <= 0.0)
      throw ConfigError("grids.tau_max_over_gamma: must be positive");
    if (g.contains("sweep")) {
      const json& sw = g.at("sweep");
      if (sw.contains("values")) {
        for (const auto& v : sw.at("values")) {
          if (!v.is_number())
            throw ConfigError("grids.sweep.values: expected numbers");
          s.sweep.push_back(v.get<double>());
        }
      } else {
        const double start = require_number(sw, "start", "grids.sweep");
        const double stop = require_number(sw, "stop", "grids.sweep");
        const double pts = require_number(sw, "points", "grids.sweep");
        if (pts < 2 || pts != std::floor(pts))
          throw ConfigError("grids.sweep.points: must be an integer >= 2");
        const int n = int(pts);
        for (int i = 0; i < n; ++i)
          s.sweep.push_back(start + (stop - start) * i / (n - 1));
      }
    }
  }
  if (s.task == Task::SweepOmega || s.task == Task::SweepDelta) {
    if (s.sweep.empty()) throw ConfigError("grids.sweep: missing or empty");
    for (std::size_t i = 1; i < s.sweep.size(); ++i)
      if (s.sweep[i] <= s.sweep[i - 1])
        throw ConfigError("grids.sweep: values must be strictly monotone");
  }

  if (config.contains("filter")) {
    const json& f = config.at("filter");
    FilterSpec spec;
    if (f.contains("file")) {
      spec.type = FilterSpec::Type::File;
      spec.file = f.at("file").get<std::string>();
    } else {
      const std::string type =
          f.contains("type") ? f.at("type").get<std::string>() : "boxcar";
      if (type == "boxcar")
        spec.type = FilterSpec::Type::Boxcar;
      else if (type == "raised_cosine")
        spec.type = FilterSpec::Type::RaisedCosine;
      else
        throw ConfigError("filter.type: must be boxcar or raised_cosine");
      spec.bandwidth_mhz = number_or(f, "bandwidth_mhz", 12.0, "filter");
      if (spec.bandwidth_mhz <= 0.0)
        throw ConfigError("filter.bandwidth_mhz: must be positive");
    }
    s.filter = spec;
  }

  if (config.contains("window")) {
    const std::string w = config.at("window").get<std::string>();
    if (w == "hann")
      s.hann_window = true;
    else if (w != "none")
      throw ConfigError("window: must be none or hann");
  }

  if (config.contains("output"))
    s.output_stem = config.at("output").get<std::string>();
  return s;
}

ScenarioResult run_scenario(const Scenario& s) {
  s.params.validate();
  ScenarioResult result;
  ordered_json& summary = result.summary;
  std::vector<std::string> warnings;
  for (const auto& w : s.params.validate()) warnings.push_back(w);

  summary["params"] = params_echo(s.params);
  summary["task"] = task_name(s.task);
  summary["line"] = s.line == LineSelect::Full   ? "FULL"
                    : s.line == LineSelect::TPRF ? "TPRF"
                    : s.line == LineSelect::GE   ? "GE"
                                                 : "EF";

  const Matrix b = lowering_operator(s.params.n_levels);
  const Matrix h = hamiltonian(s.params);
  const Matrix liou = liouvillian_matrix(h, {{s.params.gamma, b}});
  const Matrix rho_st = steady_state(liou);

  // Dressed-state bookkeeping is defined for the three-level analysis only.
  if (s.params.n_levels == 3) {
    const DressedBasis basis = diagonalize(h);
    summary["dressed_frequencies_MHz"] = {angular_to_mhz(basis.lambdas(0)),
                                          angular_to_mhz(basis.lambdas(1)),
                                          angular_to_mhz(basis.lambdas(2))};
    ordered_json pops = ordered_json::array();
    for (int j = 0; j < 3; ++j)
      pops.push_back(
          (basis.states.col(j).adjoint() * rho_st * basis.states.col(j))(0)
              .real());
    summary["steady_populations_dressed"] = pops;
  } else {
    summary["dressed_frequencies_MHz"] = nullptr;
    ordered_json pops = ordered_json::array();
    for (int j = 0; j < s.params.n_levels; ++j)
      pops.push_back(rho_st(j, j).real());
    summary["steady_populations_dressed"] = pops;
    warnings.push_back(
        "dressed-state analysis requires n_levels = 3; bare populations "
        "reported");
  }

  const double tau_max = s.tau_max_over_gamma / s.params.gamma;
  const Eigen::VectorXd delays = uniform_delays(tau_max, s.n_tau);
  const std::string csv_path = s.output_stem + ".csv";

  switch (s.task) {
    case Task::Spectrum: {
      const Matrix field = select_field(s);
      const Matrix dfield = fluctuation_operator(field, rho_st);
      const CorrelationTrace g1 =
          correlation_g1(liou, rho_st, dfield, delays);
      const Spectrum spec =
          power_spectrum(g1, steady_mean(rho_st, dfield), s.hann_window);
      std::string body = "# omega_minus_omega_d_over_2pi_MHz, psd\n";
      for (Eigen::Index i = 0; i < spec.frequencies.size(); ++i)
        body += fmt17(angular_to_mhz(spec.frequencies(i))) + ", " +
                fmt17(spec.psd(i)) + "\n";
      write_file(csv_path, body);
      result.files.push_back(csv_path);

      const auto peaks = find_peaks(spec.psd, 1e-3);
      ordered_json peak_list = ordered_json::array();
      for (int idx : peaks)
        peak_list.push_back(angular_to_mhz(spec.frequencies(idx)));
      summary["peak_positions_MHz"] = peak_list;
      summary["flux_over_gamma"] =
          steady_flux(rho_st, field) / s.params.gamma;
      try {
        summary["g2_zero"] = g2_zero(rho_st, field);
      } catch (const DegenerateNormalizationError&) {
        summary["g2_zero"] = nullptr;
        warnings.push_back("g2_zero undefined: steady flux is zero");
      }
      break;
    }
    case Task::G2: {
      const Matrix field = select_field(s);
      const CorrelationTrace g2 =
          correlation_g2(liou, rho_st, field, delays, true);
      std::optional<CorrelationTrace> filtered;
      if (s.filter) {
        const double dt = delays(1) - delays(0);
        FilterKernel kernel;
        switch (s.filter->type) {
          case FilterSpec::Type::Boxcar:
            kernel = boxcar_kernel(s.filter->bandwidth_mhz * 1e6, dt);
            break;
          case FilterSpec::Type::RaisedCosine:
            kernel = raised_cosine_kernel(s.filter->bandwidth_mhz * 1e6, dt);
            break;
          case FilterSpec::Type::File:
            kernel = load_kernel(s.filter->file, dt);
            break;
        }
        filtered = filter_g2(g2, kernel);
      }
      std::string body = filtered ? "# tau_ns, g2_normalized, g2_filtered\n"
                                  : "# tau_ns, g2_normalized\n";
      for (Eigen::Index i = 0; i < delays.size(); ++i) {
        body += fmt17(delays(i) * 1e9) + ", " + fmt17(g2.values(i).real());
        if (filtered) body += ", " + fmt17(filtered->values(i).real());
        body += "\n";
      }
      write_file(csv_path, body);
      result.files.push_back(csv_path);
      summary["flux_over_gamma"] =
          steady_flux(rho_st, select_field(s)) / s.params.gamma;
      summary["g2_zero"] = g2.values(0).real();
      if (filtered) summary["g2_zero_filtered"] = filtered->values(0).real();
      break;
    }
    case Task::SweepOmega:
    case Task::SweepDelta: {
      std::vector<SweepRow> rows(s.sweep.size());
      const int jobs = std::max(1, s.jobs);
      if (jobs == 1) {
        for (std::size_t i = 0; i < s.sweep.size(); ++i)
          rows[i] = evaluate_sweep_point(s, s.sweep[i]);
      } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w) {
          workers.emplace_back([&, w] {
            try {
              for (std::size_t i = w; i < s.sweep.size(); i += jobs)
                rows[i] = evaluate_sweep_point(s, s.sweep[i]);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
        for (auto& t : workers) t.join();
        for (auto& e : errors)
          if (e) std::rethrow_exception(e);
      }
      std::string body = "# sweep_value, flux_over_gamma, g2_zero\n";
      for (const auto& row : rows)
        body += fmt17(row.value) + ", " + fmt17(row.flux_over_gamma) + ", " +
                fmt17(row.g2zero) + "\n";
      write_file(csv_path, body);
      result.files.push_back(csv_path);

      double best_g2 = 0.0, best_val = 0.0, best_flux = 0.0;
      for (const auto& row : rows)
        if (row.g2zero > best_g2) {
          best_g2 = row.g2zero;
          best_val = row.value;
          best_flux = row.flux_over_gamma;
        }
      summary["sweep_variable"] =
          s.task == Task::SweepOmega ? "omega_mhz" : "delta_over_gamma";
      summary["g2_zero_max"] = best_g2;
      summary["g2_zero_argmax"] = best_val;
      summary["flux_over_gamma"] = best_flux;
      summary["g2_zero"] = rows.front().g2zero;
      break;
    }
    case Task::Validate: {
      std::vector<double> eps_grid = s.sweep;
      if (eps_grid.empty()) eps_grid = {0.05, 0.10, 0.15, 0.20};
      std::string body =
          "# epsilon, flux_numeric_over_gamma, flux_analytic_over_gamma, "
          "flux_rel_err, g2_numeric, g2_analytic, g2_rel_err\n";
      double worst_flux = 0.0, worst_g2 = 0.0;
      for (double eps : eps_grid) {
        LadderParams p = s.params;
        p.n_levels = 3;
        p.delta = 0.0;
        p.omega = eps * std::abs(p.alpha);
        const Matrix b3 = lowering_operator(3);
        const Matrix l3 =
            liouvillian_matrix(hamiltonian(p), {{p.gamma, b3}});
        const Matrix rho = steady_state(l3);
        const DressedBasis basis = diagonalize(hamiltonian(p));
        const auto lines = decompose(b3, basis, std::abs(p.alpha) / 4.0);
        const Matrix field = std::sqrt(p.gamma) * Matrix(lines[0].bare);
        const double flux_num = steady_flux(rho, field) / p.gamma;
        const double g2_num = g2_zero(rho, field);
        const AnalyticFlux flux_an = analytic_flux(
            {eps, p.gamma / std::abs(p.alpha)}, p.gamma);
        const double g2_an = analytic_g2zero(p.omega, p.alpha, p.gamma);
        const double flux_err =
            std::abs(flux_num - flux_an.value / p.gamma) /
            std::abs(flux_an.value / p.gamma);
        const double g2_err = std::abs(g2_num - g2_an) / g2_an;
        if (eps <= kAnalyticValidityLimit) {
          worst_flux = std::max(worst_flux, flux_err);
          worst_g2 = std::max(worst_g2, g2_err);
        }
        body += fmt17(eps) + ", " + fmt17(flux_num) + ", " +
                fmt17(flux_an.value / p.gamma) + ", " + fmt17(flux_err) +
                ", " + fmt17(g2_num) + ", " + fmt17(g2_an) + ", " +
                fmt17(g2_err) + "\n";
      }
      write_file(csv_path, body);
      result.files.push_back(csv_path);
      summary["max_flux_rel_err"] = worst_flux;
      summary["max_g2_rel_err"] = worst_g2;
      summary["agreement_within_5pct"] =
          worst_flux <= 0.05 && worst_g2 <= 0.05;
      summary["flux_over_gamma"] = nullptr;
      summary["g2_zero"] = nullptr;
      break;
    }
  }

  summary["warnings"] = warnings;
  const std::string summary_path = s.output_stem + "_summary.json";
  write_file(summary_path, summary.dump(2) + "\n");
  result.files.push_back(summary_path);
  return result;
}

}  // namespace tprf
