#include "gaussia/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "gaussia/error.hpp"

namespace gaussia {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_modes(std::size_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": number of modes must be positive");
}

void require_mode(std::size_t mode, std::size_t n, const char* what) {
  if (mode >= n) {
    throw InvalidArgument(std::string(what) + ": mode index " + std::to_string(mode) +
                          " out of range for " + std::to_string(n) + " modes");
  }
}

Matrix embed_single(const Matrix2& local, std::size_t mode, std::size_t n) {
  Matrix s = Matrix::Identity(2 * n, 2 * n);
  s.block<2, 2>(2 * mode, 2 * mode) = local;
  return s;
}

std::vector<Eigen::Index> quadrature_indices(std::span<const std::size_t> modes) {
  std::vector<Eigen::Index> idx;
  idx.reserve(2 * modes.size());
  for (auto m : modes) {
    idx.push_back(static_cast<Eigen::Index>(2 * m));
    idx.push_back(static_cast<Eigen::Index>(2 * m + 1));
  }
  return idx;
}

Matrix select(const Matrix& m, const std::vector<Eigen::Index>& rows,
              const std::vector<Eigen::Index>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw InvalidArgument("covariance matrix must be square with positive even dimension");
  }
  if (!entries_.allFinite()) throw InvalidArgument("covariance matrix has non-finite entries");
  const double scale = std::max(1.0, max_abs(entries_));
  const double asym = max_abs(entries_ - entries_.transpose());
  if (asym > kSymmetryTolerance * scale) {
    throw InvalidArgument("covariance matrix is not symmetric (max asymmetry " +
                          std::to_string(asym) + ")");
  }
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

Matrix2 CovarianceMatrix::block(std::size_t i, std::size_t j) const {
  require_mode(i, modes(), "block");
  require_mode(j, modes(), "block");
  return entries_.block<2, 2>(2 * i, 2 * j);
}

double CovarianceMatrix::determinant() const { return entries_.determinant(); }

double CovarianceMatrix::log_determinant() const {
  Eigen::LLT<Matrix> llt(entries_);
  if (llt.info() == Eigen::Success) {
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  }
  const double det = entries_.fullPivLu().determinant();
  if (!(det > 0.0)) throw NotBonaFide("covariance matrix determinant is not positive");
  return std::log(det);
}

SymplecticTransform::SymplecticTransform(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw InvalidArgument("symplectic transform must be square with positive even dimension");
  }
  if (!entries_.allFinite()) throw InvalidArgument("symplectic transform has non-finite entries");
  const Matrix omega = symplectic_form(modes());
  const double scale = std::max(1.0, max_abs(entries_));
  const double err = max_abs(entries_.transpose() * omega * entries_ - omega);
  if (err > kSymplecticTolerance * scale * scale) {
    throw InvalidArgument("matrix does not preserve the symplectic form (error " +
                          std::to_string(err) + ")");
  }
}

SymplecticTransform SymplecticTransform::identity(std::size_t modes) {
  require_modes(modes, "identity");
  return SymplecticTransform(Matrix::Identity(2 * modes, 2 * modes), Unchecked{});
}

SymplecticTransform SymplecticTransform::inverse() const {
  // S^-1 = -Omega S^T Omega
  const Matrix omega = symplectic_form(modes());
  return SymplecticTransform(-omega * entries_.transpose() * omega, Unchecked{});
}

SymplecticTransform operator*(const SymplecticTransform& lhs, const SymplecticTransform& rhs) {
  if (lhs.modes() != rhs.modes()) {
    throw DimensionMismatch("cannot compose symplectic transforms of different sizes");
  }
  return SymplecticTransform(lhs.entries_ * rhs.entries_, SymplecticTransform::Unchecked{});
}

ModePartition::ModePartition(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  std::set<std::size_t> seen;
  bool any = false;
  for (const auto& sub : subsystems_) {
    for (auto m : sub.modes) {
      if (!seen.insert(m).second) {
        throw InvalidArgument("mode " + std::to_string(m) + " appears in more than one subsystem");
      }
      any = true;
    }
  }
  if (!any) throw InvalidArgument("mode partition has no modes");
}

ModePartition ModePartition::bipartite(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  return ModePartition({{"A", std::move(a)}, {"B", std::move(b)}});
}

ModePartition ModePartition::keep(std::vector<std::size_t> modes) {
  return ModePartition({{"keep", std::move(modes)}});
}

std::vector<std::size_t> ModePartition::all_modes() const {
  std::vector<std::size_t> out;
  for (const auto& sub : subsystems_) out.insert(out.end(), sub.modes.begin(), sub.modes.end());
  return out;
}

std::size_t ModePartition::mode_count() const {
  return std::accumulate(subsystems_.begin(), subsystems_.end(), std::size_t{0},
                         [](std::size_t acc, const Subsystem& s) { return acc + s.modes.size(); });
}

void ModePartition::check_range(std::size_t n) const {
  for (auto m : all_modes()) require_mode(m, n, "partition");
}

bool ModePartition::covers(std::size_t n) const {
  if (mode_count() != n) return false;
  for (auto m : all_modes())
    if (m >= n) return false;
  return true;
}

ModePartition ModePartition::swapped() const {
  if (subsystems_.size() != 2) throw InvalidArgument("swapped() requires a bipartition");
  return ModePartition({subsystems_[1], subsystems_[0]});
}

BipartiteBlocks split(const CovarianceMatrix& sigma, const ModePartition& partition) {
  if (partition.size() != 2) throw InvalidArgument("expected a bipartition");
  if (partition[0].modes.empty() || partition[1].modes.empty()) {
    throw InvalidArgument("both sides of a bipartition must be nonempty");
  }
  partition.check_range(sigma.modes());
  const auto ia = quadrature_indices(partition[0].modes);
  const auto ib = quadrature_indices(partition[1].modes);
  const Matrix& m = sigma.entries();
  return {select(m, ia, ia), select(m, ib, ib), select(m, ia, ib)};
}

Matrix symplectic_form(std::size_t n) {
  require_modes(n, "symplectic_form");
  Matrix omega = Matrix::Zero(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

CovarianceMatrix vacuum_cm(std::size_t n) {
  require_modes(n, "vacuum_cm");
  return CovarianceMatrix(Matrix::Identity(2 * n, 2 * n));
}

CovarianceMatrix thermal_cm(double mean_occupancy) {
  if (!(mean_occupancy >= 0.0) || !std::isfinite(mean_occupancy)) {
    throw InvalidArgument("thermal occupancy must be finite and nonnegative");
  }
  return CovarianceMatrix((2.0 * mean_occupancy + 1.0) * Matrix::Identity(2, 2));
}

Matrix2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Matrix2 r;
  r << c, -s, s, c;
  return r;
}

SymplecticTransform two_mode_squeezer(double r, std::size_t i, std::size_t j, std::size_t n) {
  require_modes(n, "two_mode_squeezer");
  require_mode(i, n, "two_mode_squeezer");
  require_mode(j, n, "two_mode_squeezer");
  if (i == j) throw InvalidArgument("two_mode_squeezer: modes must differ");
  if (!std::isfinite(r)) throw InvalidArgument("two_mode_squeezer: squeezing must be finite");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Matrix s = Matrix::Identity(2 * n, 2 * n);
  const auto qi = 2 * i, pi = 2 * i + 1, qj = 2 * j, pj = 2 * j + 1;
  s(qi, qi) = ch;
  s(pi, pi) = ch;
  s(qj, qj) = ch;
  s(pj, pj) = ch;
  s(qi, qj) = sh;
  s(qj, qi) = sh;
  s(pi, pj) = -sh;
  s(pj, pi) = -sh;
  return SymplecticTransform(std::move(s));
}

SymplecticTransform local_symplectic(double theta1, double z, double theta2, std::size_t mode,
                                     std::size_t n) {
  require_modes(n, "local_symplectic");
  require_mode(mode, n, "local_symplectic");
  Matrix2 squeeze = Matrix2::Zero();
  squeeze(0, 0) = std::exp(z);
  squeeze(1, 1) = std::exp(-z);
  return SymplecticTransform(embed_single(rotation(theta1) * squeeze * rotation(theta2), mode, n));
}

SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b) {
  const auto da = a.entries().rows();
  const auto db = b.entries().rows();
  Matrix s = Matrix::Zero(da + db, da + db);
  s.topLeftCorner(da, da) = a.entries();
  s.bottomRightCorner(db, db) = b.entries();
  return SymplecticTransform(std::move(s));
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& sigma, const SymplecticTransform& s) {
  if (sigma.modes() != s.modes()) {
    throw DimensionMismatch("apply_symplectic: " + std::to_string(s.modes()) +
                            "-mode transform on " + std::to_string(sigma.modes()) + "-mode state");
  }
  Matrix out = s.entries() * sigma.entries() * s.entries().transpose();
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  const auto da = a.entries().rows();
  const auto db = b.entries().rows();
  Matrix m = Matrix::Zero(da + db, da + db);
  m.topLeftCorner(da, da) = a.entries();
  m.bottomRightCorner(db, db) = b.entries();
  return CovarianceMatrix(std::move(m));
}

CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, std::span<const std::size_t> keep) {
  if (keep.empty()) throw InvalidArgument("partial_trace: nothing to keep");
  std::set<std::size_t> unique(keep.begin(), keep.end());
  if (unique.size() != keep.size()) throw InvalidArgument("partial_trace: repeated mode");
  for (auto m : keep) require_mode(m, sigma.modes(), "partial_trace");
  const auto idx = quadrature_indices(keep);
  return CovarianceMatrix(select(sigma.entries(), idx, idx));
}

CovarianceMatrix partial_trace(const CovarianceMatrix& sigma, const ModePartition& keep) {
  const auto modes = keep.all_modes();
  return partial_trace(sigma, std::span<const std::size_t>(modes));
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  const std::size_t n = sigma.modes();
  const Matrix omega = symplectic_form(n);
  std::vector<double> moduli;
  moduli.reserve(2 * n);

  Eigen::LLT<Matrix> llt(sigma.entries());
  if (llt.info() == Eigen::Success) {
    // eig(Omega L L^T) = eig(L^T Omega L); the latter is antisymmetric, so its
    // singular values are the symplectic spectrum, each repeated twice.
    const Matrix l = llt.matrixL();
    const Matrix k = l.transpose() * omega * l;
    Eigen::JacobiSVD<Matrix> svd(k);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      moduli.push_back(svd.singularValues()(i));
  } else {
    const Eigen::MatrixXcd m = std::complex<double>(0.0, 1.0) * (omega * sigma.entries());
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      moduli.push_back(std::abs(solver.eigenvalues()(i)));
  }
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(moduli[2 * k]);
  return out;
}

bool is_bona_fide(const CovarianceMatrix& sigma) {
  if (Eigen::LLT<Matrix>(sigma.entries()).info() != Eigen::Success) return false;
  const auto nu = symplectic_eigenvalues(sigma);
  return nu.back() >= 1.0 - kBonaFideTolerance;
}

WilliamsonForm williamson(const CovarianceMatrix& sigma) {
  const std::size_t n = sigma.modes();
  const Eigen::Index dim = static_cast<Eigen::Index>(2 * n);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.entries());
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw NotBonaFide("williamson: sigma is not positive definite");
  }
  const Eigen::VectorXd root = es.eigenvalues().cwiseSqrt();
  const Matrix half = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
  const Matrix inv_half =
      es.eigenvectors() * root.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();

  // K = sigma^-1/2 Omega sigma^-1/2 is antisymmetric with spectrum +-i/nu.
  // Pairs (u, -K u / kappa) from the eigenvectors of -K^2 bring it to
  // (+) [[0, kappa], [-kappa, 0]].
  const Matrix k = inv_half * symplectic_form(n) * inv_half;
  Eigen::SelfAdjointEigenSolver<Matrix> ks(-(k * k));
  Matrix basis(dim, dim);
  std::vector<double> nu;
  Eigen::Index filled = 0;
  for (Eigen::Index col = dim - 1; col >= 0 && filled < dim; --col) {
    Eigen::VectorXd u = ks.eigenvectors().col(col);
    if (filled > 0) u -= basis.leftCols(filled) * (basis.leftCols(filled).transpose() * u);
    if (u.norm() < 0.5) continue;
    u.normalize();
    const Eigen::VectorXd ku = k * u;
    const double kappa = ku.norm();
    basis.col(filled) = u;
    basis.col(filled + 1) = -ku / kappa;
    nu.push_back(1.0 / kappa);
    filled += 2;
  }
  if (filled != dim) throw SingularMatrix("williamson: degenerate normal-mode basis");

  Eigen::VectorXd scale(dim);
  for (std::size_t j = 0; j < n; ++j) scale(2 * j) = scale(2 * j + 1) = 1.0 / std::sqrt(nu[j]);
  Matrix s = half * basis * scale.asDiagonal();
  return {SymplecticTransform(std::move(s)), std::move(nu)};
}

bool is_pure(const CovarianceMatrix& sigma, double tolerance) {
  const auto nu = symplectic_eigenvalues(sigma);
  double product = 1.0;
  for (double v : nu) product *= v * v;
  return std::abs(product - 1.0) <= tolerance;
}

}  // namespace gaussia
