#include "qent/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qent {

int FullHamiltonian::index(int atom1, int atom2, int fock, int fock_cutoff) {
  return (2 * atom1 + atom2) * (fock_cutoff + 1) + fock;
}

FullHamiltonian build_full_hamiltonian(const SystemConfig& config, int cutoff) {
  config.validate();
  const int thermal_cutoff = thermal_weights(config.nbar, config.tail_tolerance).cutoff();
  if (cutoff < thermal_cutoff + 2) {
    throw std::invalid_argument(
        "Fock cutoff must exceed the thermal cutoff by at least 2");
  }

  FullHamiltonian h;
  h.fock_cutoff = cutoff;
  const int dim = h.dimension();
  h.matrix = Eigen::MatrixXd::Zero(dim, dim);

  const double omega = config.omega;
  const double alpha = config.alpha;
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      const double inversions = (a1 == 0 ? 0.5 : -0.5) + (a2 == 0 ? 0.5 : -0.5);
      for (int m = 0; m <= cutoff; ++m) {
        const int i = FullHamiltonian::index(a1, a2, m, cutoff);
        h.matrix(i, i) = omega * (inversions + m);
      }
    }
  }
  // Atom 1 exchanges excitation with the field: |+,v2,m> <-> |-,v2,m+1>.
  for (int a2 = 0; a2 < 2; ++a2) {
    for (int m = 0; m < cutoff; ++m) {
      const int i = FullHamiltonian::index(0, a2, m, cutoff);
      const int j = FullHamiltonian::index(1, a2, m + 1, cutoff);
      h.matrix(i, j) = h.matrix(j, i) = std::sqrt(m + 1.0);
    }
  }
  // Dipole exchange between the atoms: |+,-,m> <-> |-,+,m>.
  for (int m = 0; m <= cutoff; ++m) {
    const int i = FullHamiltonian::index(0, 1, m, cutoff);
    const int j = FullHamiltonian::index(1, 0, m, cutoff);
    h.matrix(i, j) = h.matrix(j, i) = alpha;
  }
  return h;
}

FullPropagator::FullPropagator(const FullHamiltonian& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian.matrix);
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Eigen::VectorXcd FullPropagator::propagate(const Eigen::VectorXcd& initial,
                                           double t) const {
  Eigen::VectorXcd modes = eigenvectors_.transpose().cast<Complex>() * initial;
  for (int k = 0; k < modes.size(); ++k) {
    modes(k) *= std::polar(1.0, -eigenvalues_(k) * t);
  }
  return eigenvectors_.cast<Complex>() * modes;
}

Eigen::VectorXcd propagate_full(const FullHamiltonian& hamiltonian,
                                const Eigen::VectorXcd& initial, double t) {
  return FullPropagator(hamiltonian).propagate(initial, t);
}

namespace {

// Main(n) reaches Fock index n+2; two more rows of margin expose any
// truncation leakage instead of silently folding it back.
constexpr int kOracleCutoffMargin = 4;

}  // namespace

OracleEvolver::OracleEvolver(const AtomicProductState& state,
                             const SystemConfig& config)
    : thermal_(thermal_weights(config.nbar, config.tail_tolerance)),
      cutoff_(thermal_.cutoff() + kOracleCutoffMargin),
      propagator_(build_full_hamiltonian(config, cutoff_)) {
  const int dim = 4 * (cutoff_ + 1);
  initial_states_.reserve(thermal_.weights.size());
  for (int n = 0; n <= thermal_.cutoff(); ++n) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    for (int pair = 0; pair < 4; ++pair) {
      psi(pair * (cutoff_ + 1) + n) = state.amplitude(pair);
    }
    initial_states_.push_back(std::move(psi));
  }
}

AtomicDensityMatrix OracleEvolver::reduced_density(double t) const {
  const int fock_dim = cutoff_ + 1;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int n = 0; n <= thermal_.cutoff(); ++n) {
    const Eigen::VectorXcd evolved = propagator_.propagate(initial_states_[n], t);
    const Eigen::Map<const Eigen::MatrixXcd> map(evolved.data(), fock_dim, 4);
    rho += thermal_.weights[n] * (map.transpose() * map.conjugate());
  }

  AtomicDensityMatrix result;
  result.rho = rho;
  result.gt = t;
  return result;
}

AtomicDensityMatrix oracle_reduced_density(const AtomicProductState& state,
                                           const SystemConfig& config, double t) {
  return OracleEvolver(state, config).reduced_density(t);
}

}  // namespace qent
