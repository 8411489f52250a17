#include "qent/sectors.hpp"

#include <cmath>
#include <stdexcept>

namespace qent {

namespace {

// Deterministic column signs: first entry of noticeable size decides.
void fix_column_signs(Eigen::MatrixXd& vectors) {
  for (int c = 0; c < vectors.cols(); ++c) {
    for (int r = 0; r < vectors.rows(); ++r) {
      const double x = vectors(r, c);
      if (std::abs(x) > 1e-12) {
        if (x < 0.0) vectors.col(c) = -vectors.col(c);
        break;
      }
    }
  }
}

// Dressed eigensystem of Main(n) at alpha = 0: the sector splits into the
// Jaynes-Cummings doublets {|--,n+2>, |+-,n+1>} and {|-+,n+1>, |++,n>}.
SectorEigensystem decoupled_jc_eigensystem(int n) {
  const double root_a = std::sqrt(n + 2.0);
  const double root_b = std::sqrt(n + 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  SectorEigensystem sys;
  sys.eigenvalues.resize(4);
  sys.eigenvalues << root_a, root_b, -root_b, -root_a;
  sys.eigenvectors = Eigen::MatrixXd::Zero(4, 4);
  sys.eigenvectors.col(0) << inv_sqrt2, inv_sqrt2, 0.0, 0.0;
  sys.eigenvectors.col(1) << 0.0, 0.0, inv_sqrt2, inv_sqrt2;
  sys.eigenvectors.col(2) << 0.0, 0.0, inv_sqrt2, -inv_sqrt2;
  sys.eigenvectors.col(3) << inv_sqrt2, -inv_sqrt2, 0.0, 0.0;
  return sys;
}

}  // namespace

ExcitationSector ExcitationSector::main(int n) {
  if (n < 0) throw std::invalid_argument("Main(n) requires n >= 0");
  return {Kind::Main, n};
}

int ExcitationSector::dimension() const {
  switch (kind) {
    case Kind::Ground: return 1;
    case Kind::Low: return 3;
    case Kind::Main: return 4;
  }
  return 0;
}

Eigen::MatrixXd sector_hamiltonian(const ExcitationSector& sector, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");

  switch (sector.kind) {
    case ExcitationSector::Kind::Ground:
      return Eigen::MatrixXd::Zero(1, 1);
    case ExcitationSector::Kind::Low: {
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
      h(0, 1) = h(1, 0) = 1.0;     // |-,-,1> <-> |+,-,0>
      h(1, 2) = h(2, 1) = alpha;   // |+,-,0> <-> |-,+,0>
      return h;
    }
    case ExcitationSector::Kind::Main: {
      const int n = sector.n;
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(4, 4);
      h(0, 1) = h(1, 0) = std::sqrt(n + 2.0);  // |-,-,n+2> <-> |+,-,n+1>
      h(1, 2) = h(2, 1) = alpha;               // |+,-,n+1> <-> |-,+,n+1>
      h(2, 3) = h(3, 2) = std::sqrt(n + 1.0);  // |-,+,n+1> <-> |+,+,n>
      return h;
    }
  }
  throw std::logic_error("unreachable");
}

double sector_free_offset(const ExcitationSector& sector, double omega) {
  switch (sector.kind) {
    case ExcitationSector::Kind::Ground: return -omega;
    case ExcitationSector::Kind::Low: return 0.0;
    case ExcitationSector::Kind::Main: return (sector.n + 1) * omega;
  }
  return 0.0;
}

SectorEigensystem sector_eigensystem(const Eigen::MatrixXd& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  const int dim = static_cast<int>(hamiltonian.rows());

  SectorEigensystem sys;
  sys.eigenvalues.resize(dim);
  sys.eigenvectors.resize(dim, dim);
  for (int k = 0; k < dim; ++k) {
    sys.eigenvalues(k) = solver.eigenvalues()(dim - 1 - k);
    sys.eigenvectors.col(k) = solver.eigenvectors().col(dim - 1 - k);
  }
  fix_column_signs(sys.eigenvectors);
  return sys;
}

MainSectorRoots main_sector_roots(int n, double alpha, bool printed_discriminant) {
  if (n < 0) throw std::invalid_argument("Main(n) requires n >= 0");
  MainSectorRoots r;
  r.w = 4.0 * n + 6.0 + 2.0 * alpha * alpha;
  const double a2p1 = alpha * alpha + 1.0;
  const double inner = printed_discriminant ? a2p1 : a2p1 * a2p1;
  r.v = 2.0 * std::sqrt(4.0 * (n + 1.0) * alpha * alpha + inner);
  r.a = std::sqrt(r.w + r.v) / 2.0;
  r.b = std::sqrt(r.w - r.v) / 2.0;
  return r;
}

SectorEigensystem closed_form_eigensystem(int n, double alpha,
                                          bool printed_discriminant) {
  if (n < 0) throw std::invalid_argument("Main(n) requires n >= 0");
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  if (alpha == 0.0) return decoupled_jc_eigensystem(n);

  const MainSectorRoots roots = main_sector_roots(n, alpha, printed_discriminant);
  const double sqrt_np2 = std::sqrt(n + 2.0);
  const double sqrt_np1 = std::sqrt(n + 1.0);

  SectorEigensystem sys;
  sys.eigenvalues.resize(4);
  sys.eigenvalues << roots.a, roots.b, -roots.b, -roots.a;
  sys.eigenvectors.resize(4, 4);
  for (int k = 0; k < 4; ++k) {
    const double lambda = sys.eigenvalues(k);
    const double l2 = lambda * lambda;
    Eigen::Vector4d x;
    x(0) = 1.0;
    x(1) = lambda / sqrt_np2;
    x(2) = (l2 - (n + 2.0)) / (sqrt_np2 * alpha);
    x(3) = lambda * (l2 - (n + 2.0) - alpha * alpha) / (sqrt_np1 * sqrt_np2 * alpha);
    sys.eigenvectors.col(k) = x / x.norm();
  }
  fix_column_signs(sys.eigenvectors);
  return sys;
}

Eigen::MatrixXcd sector_propagator(const SectorEigensystem& eigen,
                                   double free_offset, double t) {
  const int dim = static_cast<int>(eigen.eigenvalues.size());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const Complex phase = std::polar(1.0, -(free_offset + eigen.eigenvalues(k)) * t);
    const Eigen::VectorXd& v = eigen.eigenvectors.col(k);
    u += phase * (v * v.transpose()).cast<Complex>();
  }
  return u;
}

}  // namespace qent
