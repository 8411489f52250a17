#pragma once

#include <Eigen/Dense>

#include "qent/model.hpp"

namespace qent {

// Total-excitation manifolds of the resonant Hamiltonian. Basis order
// within each sector:
//   Ground   |-,-,0>                                      (1-dim)
//   Low      |-,-,1>, |+,-,0>, |-,+,0>                    (3-dim)
//   Main(n)  |-,-,n+2>, |+,-,n+1>, |-,+,n+1>, |+,+,n>     (4-dim), n >= 0
struct ExcitationSector {
  enum class Kind { Ground, Low, Main };

  Kind kind = Kind::Ground;
  int n = 0;  // Main(n) only

  static ExcitationSector ground() { return {Kind::Ground, 0}; }
  static ExcitationSector low() { return {Kind::Low, 0}; }
  static ExcitationSector main(int n);

  int dimension() const;
};

// Interaction part of the sector Hamiltonian in units of g: tridiagonal
// with zero diagonal and off-diagonals (sqrt(n+2), alpha, sqrt(n+1)) for
// Main(n), (1, alpha) for Low.
Eigen::MatrixXd sector_hamiltonian(const ExcitationSector& sector, double alpha);

// The free part is a constant within a sector: (n+1)*omega for Main(n),
// 0 for Low, -omega for Ground.
double sector_free_offset(const ExcitationSector& sector, double omega);

struct SectorEigensystem {
  Eigen::VectorXd eigenvalues;   // descending, units of g
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, first nonzero entry > 0
};

// Dense symmetric diagonalization; the numeric ground truth.
SectorEigensystem sector_eigensystem(const Eigen::MatrixXd& hamiltonian);

// Rabi splittings of Main(n): the positive roots A >= B of
// lambda^4 - (2n+3+alpha^2) lambda^2 + (n+1)(n+2) = 0.
struct MainSectorRoots {
  double w = 0.0;  // 4n + 6 + 2 alpha^2
  double v = 0.0;  // 2 sqrt(4(n+1) alpha^2 + (alpha^2+1)^2)
  double a = 0.0;  // sqrt(w + v) / 2
  double b = 0.0;  // sqrt(w - v) / 2
};

// `printed_discriminant` evaluates the discriminant with (alpha^2+1)
// unsquared; it fails the characteristic-polynomial identity for
// alpha > 0 and exists only so the selfcheck can demonstrate that.
MainSectorRoots main_sector_roots(int n, double alpha,
                                  bool printed_discriminant = false);

// Closed-form dressed eigensystem of Main(n). The generic expressions
// divide by alpha, so alpha = 0 falls back to the decoupled
// Jaynes-Cummings pair of 2x2 blocks.
SectorEigensystem closed_form_eigensystem(int n, double alpha,
                                          bool printed_discriminant = false);

// U(t) = sum_k exp(-i (free_offset + lambda_k) t) |v_k><v_k| on the
// sector basis. Unitary for all t; U(0) = identity; U(-t) = U(t)^dag.
Eigen::MatrixXcd sector_propagator(const SectorEigensystem& eigen,
                                   double free_offset, double t);

}  // namespace qent
