#pragma once

// Phase-space representation of zero-mean Gaussian states.
//
// Quadratures are interleaved as (q1, p1, ..., qN, pN) and the vacuum
// covariance matrix is the identity. Mode indices are zero-based.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gaussia {

using Matrix = Eigen::MatrixXd;
using Matrix2 = Eigen::Matrix2d;

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kBonaFideTolerance = 1e-9;
inline constexpr double kSymplecticTolerance = 1e-10;

/// Real symmetric 2N x 2N second-moment matrix of an N-mode Gaussian state.
///
/// Construction enforces shape and symmetry only; physical admissibility is a
/// separate query (is_bona_fide) so that unphysical matrices can be inspected.
class CovarianceMatrix {
 public:
  /// Throws InvalidArgument on odd/empty/non-square shape or asymmetry beyond
  /// kSymmetryTolerance (relative to the largest entry when that exceeds 1).
  explicit CovarianceMatrix(Matrix entries);

  std::size_t modes() const noexcept { return static_cast<std::size_t>(entries_.rows() / 2); }
  const Matrix& entries() const noexcept { return entries_; }
  double operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  /// 2x2 block coupling modes i and j.
  Matrix2 block(std::size_t i, std::size_t j) const;

  double determinant() const;
  /// ln det, via Cholesky when positive definite.
  double log_determinant() const;

  friend bool operator==(const CovarianceMatrix&, const CovarianceMatrix&) = default;

 private:
  Matrix entries_;
};

/// Real 2N x 2N matrix S with S^T Omega S = Omega.
class SymplecticTransform {
 public:
  /// Throws InvalidArgument if the symplectic condition fails; the tolerance is
  /// kSymplecticTolerance scaled by max(1, |S|_max^2) to absorb roundoff in
  /// strongly squeezing transforms.
  explicit SymplecticTransform(Matrix entries);

  static SymplecticTransform identity(std::size_t modes);

  std::size_t modes() const noexcept { return static_cast<std::size_t>(entries_.rows() / 2); }
  const Matrix& entries() const noexcept { return entries_; }

  SymplecticTransform inverse() const;

  friend SymplecticTransform operator*(const SymplecticTransform& lhs,
                                       const SymplecticTransform& rhs);

 private:
  struct Unchecked {};
  SymplecticTransform(Matrix entries, Unchecked) : entries_(std::move(entries)) {}

  Matrix entries_;
};

struct Subsystem {
  std::string name;
  std::vector<std::size_t> modes;
};

/// Ordered, named, disjoint groups of mode indices.
///
/// The concatenated mode order is meaningful: partial_trace returns modes in
/// exactly that order, so a partition doubles as a relabeling.
class ModePartition {
 public:
  explicit ModePartition(std::vector<Subsystem> subsystems);

  static ModePartition bipartite(std::vector<std::size_t> a, std::vector<std::size_t> b);
  static ModePartition keep(std::vector<std::size_t> modes);

  const std::vector<Subsystem>& subsystems() const noexcept { return subsystems_; }
  std::size_t size() const noexcept { return subsystems_.size(); }
  const Subsystem& operator[](std::size_t k) const { return subsystems_.at(k); }

  std::vector<std::size_t> all_modes() const;
  std::size_t mode_count() const;

  /// Throws InvalidArgument if any index is >= n.
  void check_range(std::size_t n) const;
  /// True iff every mode 0..n-1 appears.
  bool covers(std::size_t n) const;

  /// Bipartition with the two subsystems exchanged.
  ModePartition swapped() const;

 private:
  std::vector<Subsystem> subsystems_;
};

/// Block decomposition of a bipartite CM: [[a, c], [c^T, b]].
struct BipartiteBlocks {
  Matrix a;
  Matrix b;
  Matrix c;
};

/// Splits sigma along a two-subsystem partition; both sides must be nonempty.
BipartiteBlocks split(const CovarianceMatrix& sigma, const ModePartition& partition);

Matrix symplectic_form(std::size_t n);
CovarianceMatrix vacuum_cm(std::size_t n);
/// Thermal single-mode CM (2 nbar + 1) I.
CovarianceMatrix thermal_cm(double mean_occupancy);

Matrix2 rotation(double angle);

/// Two-mode squeezer acting on modes (i, j) of an n-mode system.
SymplecticTransform two_mode_squeezer(double r, std::size_t i, std::size_t j, std::size_t n);

/// R(theta1) diag(e^z, e^-z) R(theta2) embedded on one mode.
SymplecticTransform local_symplectic(double theta1, double z, double theta2, std::size_t mode,
                                     std::size_t n);

SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b);

CovarianceMatrix apply_symplectic(const CovarianceMatrix& sigma, const SymplecticTransform& s);
CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b);

/// Principal submatrix on the partition's modes, in partition order.
CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, const ModePartition& keep);
CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, std::span<const std::size_t> keep);

/// Moduli of the eigenvalues of i Omega sigma, one per mode, descending.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma);

/// sigma > 0 and every symplectic eigenvalue >= 1 - kBonaFideTolerance.
bool is_bona_fide(const CovarianceMatrix& sigma);

/// sigma = S diag(nu_1, nu_1, ..., nu_N, nu_N) S^T with nu ascending.
struct WilliamsonForm {
  SymplecticTransform transform;
  std::vector<double> nu;
};

/// Throws NotBonaFide unless sigma is positive definite.
WilliamsonForm williamson(const CovarianceMatrix& sigma);

/// Product of squared symplectic eigenvalues equals 1 within tolerance.
bool is_pure(const CovarianceMatrix& sigma, double tolerance = kBonaFideTolerance);

}  // namespace gaussia
