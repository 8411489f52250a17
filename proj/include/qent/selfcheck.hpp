#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qent {

struct SelfcheckOptions {
  // Evaluate the closed forms with the uncorrected discriminant; the
  // eigensystem suite must then fail, demonstrating the correction matters.
  bool paper_vn_typo = false;
  // Scales the tolerance-derived Fock cutoff (< 1 starves the thermal sum;
  // the truncation suite must then flag the tail mass).
  double cutoff_scale = 1.0;
};

struct SuiteResult {
  std::string name;
  double max_error = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

// Fixed-parameter verification suites: closed-form eigenvalues against
// numeric diagonalization, propagator unitarity, sector/full-space
// equivalence, negativity range, and Fock-truncation certification.
std::vector<SuiteResult> selfcheck(const SelfcheckOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);
void print_report(const std::vector<SuiteResult>& results, std::ostream& out);

}  // namespace qent
