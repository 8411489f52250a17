#include "qent/reduced.hpp"

#include <cmath>
#include <stdexcept>

#include "qent/entanglement.hpp"

namespace qent {

namespace {

// Kahan-compensated accumulator, applied entrywise.
struct CompensatedMatrixSum {
  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
  Eigen::Matrix4cd residual = Eigen::Matrix4cd::Zero();

  void add(const Eigen::Matrix4cd& term) {
    const Eigen::Matrix4cd y = term - residual;
    const Eigen::Matrix4cd next = sum + y;
    residual = (next - sum) - y;
    sum = next;
  }
};

Eigen::VectorXcd sector_initial(const std::vector<Complex>& coeffs) {
  Eigen::VectorXcd v(static_cast<int>(coeffs.size()));
  for (int i = 0; i < v.size(); ++i) v(i) = coeffs[i];
  return v;
}

}  // namespace

ThermalEvolver::ThermalEvolver(const AtomicProductState& state,
                               const SystemConfig& config, int cutoff_override)
    : thermal_(thermal_weights(config.nbar, config.tail_tolerance)) {
  config.validate();
  if (cutoff_override >= 0) {
    const double r = config.nbar / (1.0 + config.nbar);
    thermal_.weights.resize(cutoff_override + 1);
    for (int n = 0; n <= cutoff_override; ++n) {
      thermal_.weights[n] = std::pow(r, n) / (1.0 + config.nbar);
    }
    thermal_.tail_mass = std::pow(r, cutoff_override + 1);
  }
  plans_.reserve(thermal_.weights.size());
  for (int n = 0; n <= thermal_.cutoff(); ++n) {
    plans_.push_back(make_plan(state, n, config));
  }
}

ThermalEvolver::ComponentPlan ThermalEvolver::make_plan(
    const AtomicProductState& state, int n, const SystemConfig& config) {
  const double alpha = config.alpha;
  const double omega = config.omega;

  ComponentPlan plan;
  plan.fock_span = n + 3;

  auto add_term = [&](const ExcitationSector& sector,
                      const std::vector<Complex>& coeffs,
                      std::vector<int> atom_rows, std::vector<int> fock_cols) {
    SectorTerm term;
    term.eigen = sector_eigensystem(sector_hamiltonian(sector, alpha));
    term.free_offset = sector_free_offset(sector, omega);
    term.overlaps =
        term.eigen.eigenvectors.transpose().cast<Complex>() * sector_initial(coeffs);
    term.atom_rows = std::move(atom_rows);
    term.fock_cols = std::move(fock_cols);
    plan.terms.push_back(std::move(term));
  };

  // a |++,n>: always Main(n).
  add_term(ExcitationSector::main(n), {0.0, 0.0, 0.0, state.a},
           {kMM, kPM, kMP, kPP}, {n + 2, n + 1, n + 1, n});

  // b |+-,n> and c |-+,n>: Main(n-1) for n >= 1, Low for n = 0.
  if (n >= 1) {
    add_term(ExcitationSector::main(n - 1), {0.0, state.b, state.c, 0.0},
             {kMM, kPM, kMP, kPP}, {n + 1, n, n, n - 1});
  } else {
    add_term(ExcitationSector::low(), {0.0, state.b, state.c},
             {kMM, kPM, kMP}, {1, 0, 0});
  }

  // d |--,n>: Main(n-2) for n >= 2, Low for n = 1, Ground for n = 0.
  if (n >= 2) {
    add_term(ExcitationSector::main(n - 2), {state.d, 0.0, 0.0, 0.0},
             {kMM, kPM, kMP, kPP}, {n, n - 1, n - 1, n - 2});
  } else if (n == 1) {
    add_term(ExcitationSector::low(), {state.d, 0.0, 0.0},
             {kMM, kPM, kMP}, {1, 0, 0});
  } else {
    SectorTerm ground;
    ground.eigen.eigenvalues = Eigen::VectorXd::Zero(1);
    ground.eigen.eigenvectors = Eigen::MatrixXd::Ones(1, 1);
    ground.free_offset = sector_free_offset(ExcitationSector::ground(), omega);
    ground.overlaps = Eigen::VectorXcd::Constant(1, state.d);
    ground.atom_rows = {kMM};
    ground.fock_cols = {0};
    plan.terms.push_back(std::move(ground));
  }

  return plan;
}

JointAmplitudes ThermalEvolver::component(int n, double t) const {
  if (n < 0 || n >= static_cast<int>(plans_.size())) {
    throw std::out_of_range("Fock index outside the retained distribution");
  }
  const ComponentPlan& plan = plans_[n];

  JointAmplitudes joint;
  joint.amplitudes = Eigen::MatrixXcd::Zero(4, plan.fock_span);
  for (const SectorTerm& term : plan.terms) {
    const int dim = static_cast<int>(term.eigen.eigenvalues.size());
    Eigen::VectorXcd coeff(dim);
    for (int k = 0; k < dim; ++k) {
      coeff(k) = std::polar(1.0, -(term.free_offset + term.eigen.eigenvalues(k)) * t) *
                 term.overlaps(k);
    }
    const Eigen::VectorXcd evolved = term.eigen.eigenvectors.cast<Complex>() * coeff;
    for (int r = 0; r < dim; ++r) {
      joint.amplitudes(term.atom_rows[r], term.fock_cols[r]) += evolved(r);
    }
  }
  return joint;
}

AtomicDensityMatrix ThermalEvolver::reduced_density(double t) const {
  CompensatedMatrixSum acc;
  for (int n = 0; n <= thermal_.cutoff(); ++n) {
    const JointAmplitudes joint = component(n, t);
    // Tracing the field pairs amplitudes with equal Fock index only.
    const Eigen::Matrix4cd contribution =
        joint.amplitudes * joint.amplitudes.adjoint();
    acc.add(thermal_.weights[n] * contribution);
  }

  AtomicDensityMatrix result;
  result.rho = acc.sum;
  result.gt = t;
  return result;
}

JointAmplitudes evolve_joint_component(const AtomicProductState& state, int n,
                                       double t, const SystemConfig& config) {
  if (n < 0) throw std::invalid_argument("Fock index must be >= 0");
  config.validate();
  SystemConfig single = config;
  single.nbar = 0.0;  // plan only the requested component
  ThermalEvolver evolver(state, single, n);
  return evolver.component(n, t);
}

AtomicDensityMatrix reduced_density(const AtomicProductState& state,
                                    const SystemConfig& config, double t) {
  return ThermalEvolver(state, config).reduced_density(t);
}

NegativitySeries negativity_series(const AtomicProductState& state,
                                   const SystemConfig& config,
                                   const std::vector<double>& t_grid) {
  if (t_grid.empty()) {
    throw std::invalid_argument("time grid must be nonempty");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (t_grid[i] < t_grid[i - 1]) {
      throw std::invalid_argument("time grid must be ascending");
    }
  }

  ThermalEvolver evolver(state, config);
  NegativitySeries series;
  series.gt = t_grid;
  series.negativity.reserve(t_grid.size());
  for (const double t : t_grid) {
    series.negativity.push_back(negativity(evolver.reduced_density(t).rho));
  }
  series.alpha = config.alpha;
  series.nbar = config.nbar;
  series.theta1 = state.theta1;
  series.theta2 = state.theta2;
  series.phi1 = state.phi1;
  series.phi2 = state.phi2;
  return series;
}

}  // namespace qent
