#include "gaussia/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gaussia/error.hpp"
#include "gaussia/optimize.hpp"

namespace gaussia {

namespace {

void require_single_mode_measurement(const ModePartition& partition) {
  if (partition.size() != 2) throw InvalidArgument("measurement: expected a bipartition");
  if (partition[1].modes.size() != 1) {
    throw Unsupported("measurement: only single-mode measured subsystems are supported");
  }
}

ModePartition oriented(const ModePartition& partition, Side measured) {
  return measured == Side::B ? partition : partition.swapped();
}

void require_two_mode(const CovarianceMatrix& sigma, const ModePartition& partition) {
  if (partition.size() != 2 || !partition.covers(sigma.modes()) || sigma.modes() != 2) {
    throw Unsupported("one-way correlations are implemented for two-mode states only");
  }
}

}  // namespace

MeasurementSeed::MeasurementSeed(double theta, double log_squeeze, double thermal)
    : theta_(theta), log_squeeze_(log_squeeze), thermal_(thermal) {
  if (!std::isfinite(theta) || !std::isfinite(log_squeeze) || !std::isfinite(thermal)) {
    throw InvalidArgument("measurement seed parameters must be finite");
  }
  if (std::abs(log_squeeze) > kMaxLogSqueeze) {
    throw InvalidArgument("measurement seed log-squeeze outside [-20, 20]");
  }
  if (thermal < 0.0) throw InvalidArgument("measurement seed occupancy must be nonnegative");
  theta_ = std::fmod(theta_, std::numbers::pi);
  if (theta_ < 0.0) theta_ += std::numbers::pi;
  if (theta_ >= std::numbers::pi) theta_ = 0.0;
}

Matrix2 MeasurementSeed::cm() const {
  Matrix2 d = Matrix2::Zero();
  d(0, 0) = std::exp(2.0 * log_squeeze_);
  d(1, 1) = std::exp(-2.0 * log_squeeze_);
  const Matrix2 r = rotation(theta_);
  return (2.0 * thermal_ + 1.0) * r * d * r.transpose();
}

CovarianceMatrix conditional_cm(const CovarianceMatrix& sigma, const ModePartition& partition,
                                const MeasurementSeed& seed) {
  require_single_mode_measurement(partition);
  const auto blocks = split(sigma, partition);

  // Work in the seed's eigenframe so the e^{+-2z} entries never meet in a
  // cancelling determinant.
  const Matrix2 r = rotation(seed.theta());
  const double scale = 2.0 * seed.thermal() + 1.0;
  Matrix2 m = r.transpose() * blocks.b * r;
  m(0, 0) += scale * std::exp(2.0 * seed.log_squeeze());
  m(1, 1) += scale * std::exp(-2.0 * seed.log_squeeze());
  m(0, 1) = m(1, 0) = 0.5 * (m(0, 1) + m(1, 0));
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1);
  if (!(det > 0.0)) throw SingularMatrix("conditional_cm: sigma_B + Gamma is singular");
  Matrix2 inv;
  inv << m(1, 1) / det, -m(0, 1) / det, -m(0, 1) / det, m(0, 0) / det;

  const Matrix c = blocks.c * r;
  return CovarianceMatrix(blocks.a - c * inv * c.transpose());
}

CovarianceMatrix homodyne_conditional_cm(const CovarianceMatrix& sigma,
                                         const ModePartition& partition, double theta,
                                         bool squeezed_p) {
  require_single_mode_measurement(partition);
  const auto blocks = split(sigma, partition);
  const Eigen::Vector2d v = rotation(theta).col(squeezed_p ? 1 : 0);
  const double variance = v.dot(blocks.b * v);
  if (!(variance > 0.0)) throw SingularMatrix("homodyne_conditional_cm: zero quadrature variance");
  const Eigen::VectorXd cv = blocks.c * v;
  return CovarianceMatrix(blocks.a - cv * cv.transpose() / variance);
}

double measurement_gain(const CovarianceMatrix& sigma, const ModePartition& partition,
                        const MeasurementSeed& seed) {
  const CovarianceMatrix cond = conditional_cm(sigma, partition, seed);
  const auto blocks = split(sigma, partition);
  return 0.5 * (CovarianceMatrix(blocks.a).log_determinant() - cond.log_determinant());
}

OneWayCorrelation classical_correlations(const CovarianceMatrix& sigma,
                                         const ModePartition& partition, Side measured,
                                         const MeasurementSearch& search) {
  require_two_mode(sigma, partition);
  if (search.theta_grid < 1 || search.z_grid < 2 || search.max_rounds < 1) {
    throw InvalidArgument("classical_correlations: invalid search configuration");
  }
  const ModePartition p = oriented(partition, measured);
  auto gain = [&](double theta, double z) {
    return measurement_gain(sigma, p, MeasurementSeed(theta, std::clamp(z, -kMaxLogSqueeze,
                                                                        kMaxLogSqueeze)));
  };

  const double dtheta = std::numbers::pi / search.theta_grid;
  const double dz = 2.0 * search.z_grid_limit / (search.z_grid - 1);

  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_z = 0.0;
  for (int i = 0; i < search.theta_grid; ++i) {
    const double theta = i * dtheta;
    for (int j = 0; j < search.z_grid; ++j) {
      const double z = -search.z_grid_limit + j * dz;
      const double g = gain(theta, z);
      const double tie = 1e-12 * std::max(1.0, std::abs(best));
      bool take = !std::isfinite(best) || g > best + tie;
      if (!take && std::abs(g - best) <= tie) {
        take = std::abs(z) < std::abs(best_z) ||
               (std::abs(z) == std::abs(best_z) && theta < best_theta);
      }
      if (take) {
        best = g;
        best_theta = theta;
        best_z = z;
      }
    }
  }

  auto improves = [&](double candidate) {
    return candidate > best + 1e-15 * std::max(1.0, std::abs(best));
  };

  double reach = dz;
  int round = 0;
  bool converged = false;
  while (round < search.max_rounds) {
    ++round;
    const double previous = best;

    const auto th = optimize::golden_section(
        [&](double theta) { return -gain(theta, best_z); }, best_theta - dtheta,
        best_theta + dtheta);
    if (improves(-th.value)) {
      best = -th.value;
      best_theta = MeasurementSeed(th.x, 0.0).theta();
    }

    const double lo = std::max(-kMaxLogSqueeze, best_z - reach);
    const double hi = std::min(kMaxLogSqueeze, best_z + reach);
    const auto zz =
        optimize::golden_section([&](double z) { return -gain(best_theta, z); }, lo, hi);
    bool at_edge = false;
    if (improves(-zz.value)) {
      best = -zz.value;
      best_z = zz.x;
      const double edge_tol = 1e-6 * (hi - lo);
      at_edge = (zz.x - lo < edge_tol && lo > -kMaxLogSqueeze) ||
                (hi - zz.x < edge_tol && hi < kMaxLogSqueeze);
    }
    reach = at_edge ? 2.0 * reach : dz;

    if (!at_edge &&
        best - previous <= search.relative_tolerance * std::max(std::abs(best), 1e-300)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NotConverged("classical_correlations: refinement did not reach tolerance", best);
  }
  return {CorrelationValue(best, CorrelationKind::classical), MeasurementSeed(best_theta, best_z),
          round};
}

OneWayCorrelation discord(const CovarianceMatrix& sigma, const ModePartition& partition,
                          Side measured, const MeasurementSearch& search) {
  const auto j2 = classical_correlations(sigma, partition, measured, search);
  const double i2 = mutual_information(sigma, partition).value();
  return {CorrelationValue(i2 - j2.value.value(), CorrelationKind::discord), j2.seed, j2.rounds};
}

}  // namespace gaussia
