#include "qent/entanglement.hpp"

#include <stdexcept>

namespace qent {

Eigen::Matrix4cd partial_transpose_atom1(const Eigen::Matrix4cd& rho) {
  const double asymmetry = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-8) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }

  // Index i = 2*v1 + v2 over (atom1, atom2); transposing atom 1 swaps the
  // off-diagonal 2x2 blocks.
  Eigen::Matrix4cd pt;
  for (int v1 = 0; v1 < 2; ++v1)
    for (int v2 = 0; v2 < 2; ++v2)
      for (int w1 = 0; w1 < 2; ++w1)
        for (int w2 = 0; w2 < 2; ++w2)
          pt(2 * v1 + v2, 2 * w1 + w2) = rho(2 * w1 + v2, 2 * v1 + w2);
  return pt;
}

double negativity(const Eigen::Matrix4cd& rho) {
  const Eigen::Matrix4cd pt = partial_transpose_atom1(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt);

  double sum_negative = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double mu = solver.eigenvalues()(k);
    if (mu < -1e-12) sum_negative += mu;
  }
  return -2.0 * sum_negative;
}

}  // namespace qent
