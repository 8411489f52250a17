#pragma once

#include <Eigen/Dense>

#include "qent/model.hpp"
#include "qent/reduced.hpp"

namespace qent {

// Dense Hamiltonian on the full 2 x 2 x (cutoff+1) product space, in units
// of g. Basis index = (2*a1 + a2) * (cutoff+1) + m with a = 0 for |+> and
// 1 for |-> (atom1, atom2, Fock lexicographic).
struct FullHamiltonian {
  Eigen::MatrixXd matrix;
  int fock_cutoff = 0;

  int dimension() const { return 4 * (fock_cutoff + 1); }
  static int index(int atom1, int atom2, int fock, int fock_cutoff);
};

// Requires cutoff >= thermal cutoff + 2 so every populated excitation
// manifold fits completely below the truncation.
FullHamiltonian build_full_hamiltonian(const SystemConfig& config, int cutoff);

// e^{-iHt} through one dense symmetric eigendecomposition, reused for
// every time point.
class FullPropagator {
 public:
  explicit FullPropagator(const FullHamiltonian& hamiltonian);

  Eigen::VectorXcd propagate(const Eigen::VectorXcd& initial, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

Eigen::VectorXcd propagate_full(const FullHamiltonian& hamiltonian,
                                const Eigen::VectorXcd& initial, double t);

// Brute-force counterpart of qent::reduced_density: same thermal average
// and field trace, computed entirely in the full space. Arbitrates the
// sector-based construction.
class OracleEvolver {
 public:
  OracleEvolver(const AtomicProductState& state, const SystemConfig& config);

  AtomicDensityMatrix reduced_density(double t) const;
  int fock_cutoff() const { return cutoff_; }

 private:
  ThermalDistribution thermal_;
  int cutoff_ = 0;
  FullPropagator propagator_;
  std::vector<Eigen::VectorXcd> initial_states_;  // one per retained Fock index
};

AtomicDensityMatrix oracle_reduced_density(const AtomicProductState& state,
                                           const SystemConfig& config, double t);

}  // namespace qent
