#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qent/model.hpp"
#include "qent/reduced.hpp"

namespace qent {

// One CLI run: a single initial product state evaluated over every
// (nbar, alpha) cell of the optional sweep axes.
struct RunSpec {
  double nbar = 0.0;
  double alpha = 0.0;
  double theta1 = 0.0, theta2 = 0.0, phi1 = 0.0, phi2 = 0.0;
  double omega = 0.0;
  double t_max = 25.0;
  int steps = 1001;
  double tail_tolerance = 1e-10;
  std::vector<double> sweep_nbar;   // empty: use the scalar nbar
  std::vector<double> sweep_alpha;  // empty: use the scalar alpha
  std::string out_path = "negativity.csv";
  bool oracle = false;
  bool long_format = false;
  std::string label = "run";

  void validate() const;
  std::vector<double> grid() const;  // gt_i = i * t_max / (steps - 1)
};

struct CellResult {
  std::string label;
  double nbar = 0.0;
  double alpha = 0.0;
  double max_negativity = 0.0;
  double argmax_gt = 0.0;
  std::string csv_path;
};

// Evaluates every sweep cell, writes CSV (one file per cell, or a single
// long-format file), and prints one summary line per cell.
std::vector<CellResult> run(const RunSpec& spec, std::ostream& summary);

// Figure presets fig1a..fig1d, fig2, fig3; fig2 and fig3 expand to one
// run per initial state. Throws std::invalid_argument on unknown names.
std::vector<RunSpec> preset_runs(const std::string& name);

// 15-significant-digit formatting used for all CSV numbers.
std::string format_number(double value);

}  // namespace qent
