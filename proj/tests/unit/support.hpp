#pragma once

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "gaussia/phase_space.hpp"

namespace gaussia::testing {

inline constexpr double kS = 0.828727;

inline ModePartition pair() { return ModePartition::bipartite({0}, {1}); }

inline Matrix random_symplectic(std::mt19937_64& rng, std::size_t n, double spread) {
  std::normal_distribution<double> g(0.0, spread);
  Matrix h(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j) h(i, j) = h(j, i) = g(rng);
  return (symplectic_form(n) * h).exp();
}

// S diag(nu) S^T with nu uniform in [1, 3].
inline CovarianceMatrix random_state(std::mt19937_64& rng, std::size_t n, double spread = 0.4) {
  std::uniform_real_distribution<double> nu(1.0, 3.0);
  Matrix d = Matrix::Zero(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) d(2 * k, 2 * k) = d(2 * k + 1, 2 * k + 1) = nu(rng);
  const Matrix s = random_symplectic(rng, n, spread);
  return CovarianceMatrix(Matrix(s * d * s.transpose()));
}

inline CovarianceMatrix random_pure(std::mt19937_64& rng, std::size_t n, double spread = 0.5) {
  return apply_symplectic(vacuum_cm(n), SymplecticTransform(random_symplectic(rng, n, spread)));
}

inline SymplecticTransform random_local(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 3.14159);
  std::uniform_real_distribution<double> z(-1.0, 1.0);
  return local_symplectic(angle(rng), z(rng), angle(rng), 0, 2) *
         local_symplectic(angle(rng), z(rng), angle(rng), 1, 2);
}

// The inertial two-mode squeezed CM written out entry by entry.
inline Matrix two_mode_squeezed(double s) {
  const double c = std::cosh(2 * s), sh = std::sinh(2 * s);
  Matrix m(4, 4);
  m << c, 0, sh, 0,
       0, c, 0, -sh,
       sh, 0, c, 0,
       0, -sh, 0, c;
  return m;
}

}  // namespace gaussia::testing
