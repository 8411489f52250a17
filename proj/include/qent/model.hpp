#pragma once

#include <complex>
#include <vector>

namespace qent {

using Complex = std::complex<double>;

// Two-atom basis order shared by every 4x4 matrix in this library.
// Atom 1 is the cavity atom; |+> is the excited state.
enum AtomicBasis : int { kPP = 0, kPM = 1, kMP = 2, kMM = 3 };

// Physical parameters. alpha = J/g and omega are in units of the
// atom-field coupling g; all times are the dimensionless gt.
struct SystemConfig {
  double coupling_g = 1.0;
  double alpha = 0.0;
  double omega = 0.0;
  double nbar = 0.0;
  double tail_tolerance = 1e-10;

  // Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

// Product state (cos t1 |+> + e^{i f1} sin t1 |->) x (same with t2, f2).
// (a, b, c, d) are the |++>, |+->, |-+>, |--> amplitudes.
struct AtomicProductState {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};

  Complex amplitude(int basis_index) const;
};

AtomicProductState product_amplitudes(double theta1, double theta2,
                                      double phi1, double phi2);

// Geometric photon-number distribution p_n = nbar^n / (1+nbar)^{n+1},
// truncated at the smallest cutoff N whose exact tail mass
// (nbar/(1+nbar))^{N+1} falls below the tolerance.
struct ThermalDistribution {
  double nbar = 0.0;
  std::vector<double> weights;  // p_0 .. p_N
  double tail_mass = 0.0;

  int cutoff() const { return static_cast<int>(weights.size()) - 1; }
};

ThermalDistribution thermal_weights(double nbar, double tail_tolerance);

// Bose-Einstein occupation 1/(exp(hbar*omega/kB*T) - 1) for a mode of
// angular frequency omega [rad/s] at temperature T [K].
double mean_photon_from_temperature(double omega, double temperature);

}  // namespace qent
