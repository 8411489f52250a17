#include "qent/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "qent/entanglement.hpp"
#include "qent/model.hpp"
#include "qent/oracle.hpp"
#include "qent/reduced.hpp"
#include "qent/sectors.hpp"

namespace qent {

namespace {

SuiteResult eigensystem_suite(bool paper_vn_typo) {
  SuiteResult suite{"eigensystem", 0.0, 1e-10, false};
  for (const double alpha : {0.1, 0.5, 1.0, 2.0}) {
    for (int n = 0; n <= 30; ++n) {
      const SectorEigensystem numeric =
          sector_eigensystem(sector_hamiltonian(ExcitationSector::main(n), alpha));
      const SectorEigensystem closed =
          closed_form_eigensystem(n, alpha, paper_vn_typo);
      const double err =
          (numeric.eigenvalues - closed.eigenvalues).cwiseAbs().maxCoeff();
      suite.max_error = std::max(suite.max_error, err);
    }
  }
  suite.passed = suite.max_error < suite.threshold;
  return suite;
}

SuiteResult unitarity_suite() {
  SuiteResult suite{"unitarity", 0.0, 1e-12, false};
  const double times[] = {0.0, 0.1, 1.0, 5.0, 20.0, 50.0};
  for (const double alpha : {0.0, 0.5, 1.0, 2.0}) {
    std::vector<ExcitationSector> sectors = {ExcitationSector::low()};
    for (const int n : {0, 1, 2, 5, 10, 20, 40, 60}) {
      sectors.push_back(ExcitationSector::main(n));
    }
    for (const ExcitationSector& sector : sectors) {
      const SectorEigensystem eigen =
          sector_eigensystem(sector_hamiltonian(sector, alpha));
      const double offset = sector_free_offset(sector, 0.7);
      for (const double t : times) {
        const Eigen::MatrixXcd u = sector_propagator(eigen, offset, t);
        const Eigen::MatrixXcd defect =
            u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
        suite.max_error = std::max(suite.max_error, defect.cwiseAbs().maxCoeff());
      }
    }
  }
  suite.passed = suite.max_error < suite.threshold;
  return suite;
}

SuiteResult oracle_suite() {
  SuiteResult suite{"oracle-equivalence", 0.0, 1e-9, false};
  const AtomicProductState states[] = {
      product_amplitudes(0.3, 1.1, 0.4, 1.9),
      product_amplitudes(0.7853981633974483, 0.7853981633974483, 0.0, 0.0),
  };
  struct Params {
    double alpha;
    double nbar;
  };
  const Params params[] = {{0.5, 0.01}, {0.5, 1.0}, {1.5, 0.5}, {0.0, 2.0}};
  for (const AtomicProductState& state : states) {
    for (const Params& p : params) {
      SystemConfig config;
      config.alpha = p.alpha;
      config.nbar = p.nbar;
      ThermalEvolver sector_path(state, config);
      OracleEvolver full_path(state, config);
      for (const double t : {0.7, 5.3, 19.1}) {
        const Eigen::Matrix4cd diff = sector_path.reduced_density(t).rho -
                                      full_path.reduced_density(t).rho;
        suite.max_error = std::max(suite.max_error, diff.cwiseAbs().maxCoeff());
      }
    }
  }
  suite.passed = suite.max_error < suite.threshold;
  return suite;
}

SuiteResult negativity_range_suite() {
  SuiteResult suite{"negativity-range", 0.0, 1e-10, false};
  struct Case {
    double theta1, theta2, alpha, nbar;
  };
  const Case cases[] = {
      {0.0, 0.0, 0.5, 0.01},
      {0.7853981633974483, 0.7853981633974483, 1.0, 1.0},
  };
  for (const Case& c : cases) {
    const AtomicProductState state = product_amplitudes(c.theta1, c.theta2, 0.0, 0.0);
    SystemConfig config;
    config.alpha = c.alpha;
    config.nbar = c.nbar;
    ThermalEvolver evolver(state, config);
    for (int i = 0; i <= 200; ++i) {
      const double t = 25.0 * i / 200.0;
      const double eps = negativity(evolver.reduced_density(t).rho);
      suite.max_error = std::max(suite.max_error, std::max(-eps, eps - 1.0));
    }
  }
  suite.max_error = std::max(suite.max_error, 0.0);
  suite.passed = suite.max_error < suite.threshold;
  return suite;
}

SuiteResult truncation_tail_suite(double cutoff_scale) {
  // Reported as tail mass relative to the tolerance; >= 1 means the
  // retained weights no longer certify the truncation.
  SuiteResult suite{"truncation-tail", 0.0, 1.0, false};
  const double tolerance = 1e-10;
  for (const double nbar : {0.01, 0.5, 1.0, 2.0}) {
    const ThermalDistribution full = thermal_weights(nbar, tolerance);
    const int scaled =
        std::max(0, static_cast<int>(std::lround(full.cutoff() * cutoff_scale)));
    const double r = nbar / (1.0 + nbar);
    const double tail = std::pow(r, scaled + 1);
    suite.max_error = std::max(suite.max_error, tail / tolerance);
  }
  suite.passed = suite.max_error < suite.threshold;
  return suite;
}

SuiteResult truncation_negativity_suite(double cutoff_scale) {
  SuiteResult suite{"truncation-negativity", 0.0, 1e-6, false};
  const AtomicProductState state =
      product_amplitudes(0.7853981633974483, 0.7853981633974483, 0.0, 0.0);
  SystemConfig config;
  config.alpha = 0.5;
  config.nbar = 1.0;
  const int base_cutoff = std::max(
      0, static_cast<int>(std::lround(
             thermal_weights(config.nbar, config.tail_tolerance).cutoff() *
             cutoff_scale)));
  ThermalEvolver coarse(state, config, base_cutoff);
  ThermalEvolver fine(state, config, 2 * base_cutoff);
  for (int i = 0; i <= 50; ++i) {
    const double t = 25.0 * i / 50.0;
    const double eps_coarse = negativity(coarse.reduced_density(t).rho);
    const double eps_fine = negativity(fine.reduced_density(t).rho);
    suite.max_error = std::max(suite.max_error, std::abs(eps_coarse - eps_fine));
  }
  suite.passed = suite.max_error < suite.threshold;
  return suite;
}

}  // namespace

std::vector<SuiteResult> selfcheck(const SelfcheckOptions& options) {
  std::vector<SuiteResult> results;
  results.push_back(eigensystem_suite(options.paper_vn_typo));
  results.push_back(unitarity_suite());
  results.push_back(oracle_suite());
  results.push_back(negativity_range_suite());
  results.push_back(truncation_tail_suite(options.cutoff_scale));
  results.push_back(truncation_negativity_suite(options.cutoff_scale));
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

void print_report(const std::vector<SuiteResult>& results, std::ostream& out) {
  for (const SuiteResult& suite : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %-22s max_error=%-12.3e threshold=%.1e",
                  suite.passed ? "PASS" : "FAIL", suite.name.c_str(),
                  suite.max_error, suite.threshold);
    out << line << "\n";
  }
}

}  // namespace qent
