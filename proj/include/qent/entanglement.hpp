#pragma once

#include <Eigen/Dense>

namespace qent {

// rho with the atom-1 indices transposed. Rejects input whose Hermitian
// asymmetry exceeds 1e-8.
Eigen::Matrix4cd partial_transpose_atom1(const Eigen::Matrix4cd& rho);

// Negativity -2 sum_i mu_i^- over the negative eigenvalues of rho^{T1};
// 0 for separable states, 1 at maximum entanglement. Eigenvalues in
// [-1e-12, 0) are numerical noise and count as zero.
double negativity(const Eigen::Matrix4cd& rho);

}  // namespace qent
