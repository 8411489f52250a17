#include "qent/model.hpp"

#include <cmath>
#include <stdexcept>

namespace qent {

void SystemConfig::validate() const {
  if (!(coupling_g > 0.0)) {
    throw std::invalid_argument("coupling_g must be positive");
  }
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("alpha must be >= 0");
  }
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("nbar must be >= 0");
  }
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw std::invalid_argument("tail_tolerance must lie in (0, 1)");
  }
  if (!std::isfinite(omega)) {
    throw std::invalid_argument("omega must be finite");
  }
}

Complex AtomicProductState::amplitude(int basis_index) const {
  switch (basis_index) {
    case kPP: return a;
    case kPM: return b;
    case kMP: return c;
    case kMM: return d;
    default: throw std::out_of_range("atomic basis index");
  }
}

AtomicProductState product_amplitudes(double theta1, double theta2,
                                      double phi1, double phi2) {
  AtomicProductState s;
  s.theta1 = theta1;
  s.theta2 = theta2;
  s.phi1 = phi1;
  s.phi2 = phi2;
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  const Complex e1 = std::polar(1.0, phi1);
  const Complex e2 = std::polar(1.0, phi2);
  s.a = c1 * c2;
  s.b = c1 * s2 * e2;
  s.c = c2 * s1 * e1;
  s.d = s1 * s2 * e1 * e2;
  return s;
}

ThermalDistribution thermal_weights(double nbar, double tail_tolerance) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("nbar must be >= 0");
  }
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw std::invalid_argument("tail_tolerance must lie in (0, 1)");
  }

  ThermalDistribution dist;
  dist.nbar = nbar;
  if (nbar == 0.0) {
    dist.weights = {1.0};
    dist.tail_mass = 0.0;
    return dist;
  }

  // Tail beyond N sums exactly to r^{N+1} with r = nbar/(1+nbar).
  const double r = nbar / (1.0 + nbar);
  int cutoff = static_cast<int>(std::ceil(std::log(tail_tolerance) / std::log(r))) - 1;
  if (cutoff < 0) cutoff = 0;
  while (std::pow(r, cutoff + 1) >= tail_tolerance) ++cutoff;
  while (cutoff > 0 && std::pow(r, cutoff) < tail_tolerance) --cutoff;

  dist.weights.resize(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    dist.weights[n] = std::pow(r, n) / (1.0 + nbar);
  }
  dist.tail_mass = std::pow(r, cutoff + 1);
  return dist;
}

double mean_photon_from_temperature(double omega, double temperature) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("omega must be positive");
  }
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("temperature must be positive");
  }
  constexpr double kHbar = 1.054571817e-34;  // J s
  constexpr double kBoltzmann = 1.380649e-23;  // J / K
  return 1.0 / std::expm1(kHbar * omega / (kBoltzmann * temperature));
}

}  // namespace qent
