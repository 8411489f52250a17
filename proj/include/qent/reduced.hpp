#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qent/model.hpp"
#include "qent/sectors.hpp"

namespace qent {

struct AtomicDensityMatrix {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  double gt = 0.0;
};

// Evolved amplitudes of one |Psi_A> x |n> component, indexed by
// (atomic basis row, Fock column).
struct JointAmplitudes {
  Eigen::MatrixXcd amplitudes;  // 4 x (n+3)

  double squared_norm() const { return amplitudes.squaredNorm(); }
};

// Thermally averaged reduced state of the two atoms:
//   rho_A(t) = sum_n p_n Tr_field[ U(t) |Psi_A,n><Psi_A,n| U(t)^dag ].
// Construction routes each Fock component into its excitation sectors and
// diagonalizes them once; evaluating a time point then costs only phase
// factors, so a whole series reuses one diagonalization pass. Thermal
// terms accumulate in ascending n with compensated summation, keeping the
// result deterministic.
class ThermalEvolver {
 public:
  // cutoff_override >= 0 replaces the tolerance-derived Fock cutoff
  // (used by the truncation-certification checks).
  ThermalEvolver(const AtomicProductState& state, const SystemConfig& config,
                 int cutoff_override = -1);

  AtomicDensityMatrix reduced_density(double t) const;
  JointAmplitudes component(int n, double t) const;

  const ThermalDistribution& distribution() const { return thermal_; }

 private:
  struct SectorTerm {
    SectorEigensystem eigen;
    double free_offset = 0.0;
    Eigen::VectorXcd overlaps;          // <v_k | initial sector coefficients>
    std::vector<int> atom_rows;         // amplitude-map row per sector row
    std::vector<int> fock_cols;         // amplitude-map column per sector row
  };
  struct ComponentPlan {
    std::vector<SectorTerm> terms;
    int fock_span = 1;  // columns 0 .. n+2
  };

  static ComponentPlan make_plan(const AtomicProductState& state, int n,
                                 const SystemConfig& config);

  ThermalDistribution thermal_;
  std::vector<ComponentPlan> plans_;  // one per retained Fock index
};

// One Fock component evolved in isolation.
JointAmplitudes evolve_joint_component(const AtomicProductState& state, int n,
                                       double t, const SystemConfig& config);

// Single-time-point convenience wrapper around ThermalEvolver.
AtomicDensityMatrix reduced_density(const AtomicProductState& state,
                                    const SystemConfig& config, double t);

struct NegativitySeries {
  std::vector<double> gt;
  std::vector<double> negativity;
  // parameter echo
  double alpha = 0.0;
  double nbar = 0.0;
  double theta1 = 0.0, theta2 = 0.0, phi1 = 0.0, phi2 = 0.0;
};

// Negativity of the reduced state along an ascending gt grid.
NegativitySeries negativity_series(const AtomicProductState& state,
                                   const SystemConfig& config,
                                   const std::vector<double>& t_grid);

}  // namespace qent
