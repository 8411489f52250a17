#include "qent/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qent/entanglement.hpp"
#include "qent/oracle.hpp"

namespace qent {

namespace {

std::string suffix_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

// Inserts a suffix before the extension: out.csv -> out_nbar1.csv.
std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + suffix;
  }
  return path.substr(0, dot) + suffix + path.substr(dot);
}

struct Cell {
  double nbar;
  double alpha;
};

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", value);
  return buf;
}

void RunSpec::validate() const {
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (!(t_max > 0.0)) throw std::invalid_argument("tmax must be positive");
  SystemConfig probe;
  probe.alpha = alpha;
  probe.omega = omega;
  probe.nbar = nbar;
  probe.tail_tolerance = tail_tolerance;
  probe.validate();
  for (const double v : sweep_nbar) {
    if (!(v >= 0.0)) throw std::invalid_argument("swept nbar must be >= 0");
  }
  for (const double v : sweep_alpha) {
    if (!(v >= 0.0)) throw std::invalid_argument("swept alpha must be >= 0");
  }
}

std::vector<double> RunSpec::grid() const {
  std::vector<double> ts(steps);
  for (int i = 0; i < steps; ++i) {
    ts[i] = (i * t_max) / (steps - 1);
  }
  return ts;
}

std::vector<CellResult> run(const RunSpec& spec, std::ostream& summary) {
  spec.validate();

  const std::vector<double> nbars =
      spec.sweep_nbar.empty() ? std::vector<double>{spec.nbar} : spec.sweep_nbar;
  const std::vector<double> alphas =
      spec.sweep_alpha.empty() ? std::vector<double>{spec.alpha} : spec.sweep_alpha;

  std::vector<Cell> cells;
  for (const double nb : nbars)
    for (const double al : alphas) cells.push_back({nb, al});

  const AtomicProductState state =
      product_amplitudes(spec.theta1, spec.theta2, spec.phi1, spec.phi2);
  const std::vector<double> ts = spec.grid();

  std::ofstream long_file;
  if (spec.long_format) {
    long_file.open(spec.out_path, std::ios::trunc);
    if (!long_file) {
      throw std::runtime_error("cannot write output file: " + spec.out_path);
    }
    long_file << "label,nbar,alpha,gt,negativity";
    if (spec.oracle) long_file << ",negativity_oracle";
    long_file << "\n";
  }

  std::vector<CellResult> results;
  for (const Cell& cell : cells) {
    SystemConfig config;
    config.alpha = cell.alpha;
    config.omega = spec.omega;
    config.nbar = cell.nbar;
    config.tail_tolerance = spec.tail_tolerance;

    const NegativitySeries series = negativity_series(state, config, ts);

    std::vector<double> oracle_eps;
    if (spec.oracle) {
      OracleEvolver oracle(state, config);
      oracle_eps.reserve(ts.size());
      for (const double t : ts) {
        oracle_eps.push_back(negativity(oracle.reduced_density(t).rho));
      }
    }

    CellResult result;
    result.label = spec.label;
    result.nbar = cell.nbar;
    result.alpha = cell.alpha;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (series.negativity[i] > result.max_negativity) {
        result.max_negativity = series.negativity[i];
        result.argmax_gt = ts[i];
      }
    }

    if (spec.long_format) {
      for (std::size_t i = 0; i < ts.size(); ++i) {
        long_file << spec.label << ',' << suffix_value(cell.nbar) << ','
                  << suffix_value(cell.alpha) << ',' << format_number(ts[i])
                  << ',' << format_number(series.negativity[i]);
        if (spec.oracle) long_file << ',' << format_number(oracle_eps[i]);
        long_file << "\n";
      }
      result.csv_path = spec.out_path;
    } else {
      std::string path = spec.out_path;
      if (nbars.size() > 1) path = with_suffix(path, "_nbar" + suffix_value(cell.nbar));
      if (alphas.size() > 1) path = with_suffix(path, "_alpha" + suffix_value(cell.alpha));
      std::ofstream file(path, std::ios::trunc);
      if (!file) {
        throw std::runtime_error("cannot write output file: " + path);
      }
      file << "gt,negativity";
      if (spec.oracle) file << ",negativity_oracle";
      file << "\n";
      for (std::size_t i = 0; i < ts.size(); ++i) {
        file << format_number(ts[i]) << ',' << format_number(series.negativity[i]);
        if (spec.oracle) file << ',' << format_number(oracle_eps[i]);
        file << "\n";
      }
      result.csv_path = path;
    }

    summary << "cell label=" << result.label << " nbar=" << suffix_value(result.nbar)
            << " alpha=" << suffix_value(result.alpha)
            << " max_negativity=" << format_number(result.max_negativity)
            << " at_gt=" << format_number(result.argmax_gt);
    if (!result.csv_path.empty()) summary << " file=" << result.csv_path;
    summary << "\n";
    results.push_back(std::move(result));
  }
  return results;
}

namespace {

RunSpec preset_base(double theta1, double theta2, const std::string& label) {
  RunSpec spec;
  spec.theta1 = theta1;
  spec.theta2 = theta2;
  spec.phi1 = 0.0;
  spec.phi2 = 0.0;
  spec.t_max = 25.0;
  spec.steps = 1001;
  spec.label = label;
  return spec;
}

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kQuarterPi = 0.7853981633974483;

}  // namespace

std::vector<RunSpec> preset_runs(const std::string& name) {
  if (name == "fig1a" || name == "fig1b" || name == "fig1c" || name == "fig1d") {
    RunSpec spec;
    if (name == "fig1a") spec = preset_base(0.0, kHalfPi, "pm");
    if (name == "fig1b") spec = preset_base(kHalfPi, kHalfPi, "mm");
    if (name == "fig1c") spec = preset_base(0.0, 0.0, "pp");
    if (name == "fig1d") spec = preset_base(kQuarterPi, kQuarterPi, "coh");
    spec.nbar = 0.01;
    spec.alpha = 0.5;
    return {spec};
  }
  if (name == "fig2") {
    RunSpec pm = preset_base(0.0, kHalfPi, "pm");
    RunSpec coh = preset_base(kQuarterPi, kQuarterPi, "coh");
    for (RunSpec* spec : {&pm, &coh}) {
      spec->alpha = 0.5;
      spec->sweep_nbar = {1.0, 2.0};
    }
    return {pm, coh};
  }
  if (name == "fig3") {
    RunSpec pm = preset_base(0.0, kHalfPi, "pm");
    RunSpec coh = preset_base(kQuarterPi, kQuarterPi, "coh");
    for (RunSpec* spec : {&pm, &coh}) {
      spec->nbar = 0.5;
      spec->sweep_alpha = {0.1, 1.0};
    }
    return {pm, coh};
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace qent
