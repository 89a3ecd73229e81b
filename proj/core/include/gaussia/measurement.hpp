#pragma once

// Gaussian measurements at covariance-matrix level and the one-way
// classical-correlation / discord optimizations built on them.

#include "gaussia/phase_space.hpp"
#include "gaussia/renyi.hpp"

namespace gaussia {

inline constexpr double kMaxLogSqueeze = 20.0;

/// Single-mode CM (2 nbar + 1) R(theta) diag(e^2z, e^-2z) R(theta)^T that
/// parameterizes a Gaussian POVM. Pure iff thermal == 0.
class MeasurementSeed {
 public:
  /// theta is reduced modulo pi; throws InvalidArgument for |z| > 20,
  /// negative occupancy or non-finite input.
  MeasurementSeed(double theta, double log_squeeze, double thermal = 0.0);

  static MeasurementSeed heterodyne() { return {0.0, 0.0, 0.0}; }

  double theta() const noexcept { return theta_; }
  double log_squeeze() const noexcept { return log_squeeze_; }
  double thermal() const noexcept { return thermal_; }

  Matrix2 cm() const;

 private:
  double theta_;
  double log_squeeze_;
  double thermal_;
};

/// Which subsystem of a bipartition is measured.
enum class Side { A, B };

/// CM of the unmeasured part after measuring partition[1] with the given seed:
/// sigma_A - C (sigma_B + Gamma)^-1 C^T. The measured side must be one mode.
CovarianceMatrix conditional_cm(const CovarianceMatrix& sigma, const ModePartition& partition,
                                const MeasurementSeed& seed);

/// z -> +inf (or -inf when squeezed_p is false) limit of conditional_cm: an
/// ideal homodyne measurement of the quadrature R(theta) e_p (resp. e_q).
CovarianceMatrix homodyne_conditional_cm(const CovarianceMatrix& sigma,
                                         const ModePartition& partition, double theta,
                                         bool squeezed_p);

/// 1/2 ln(det sigma_A / det conditional) for a measurement on partition[1].
double measurement_gain(const CovarianceMatrix& sigma, const ModePartition& partition,
                        const MeasurementSeed& seed);

struct MeasurementSearch {
  int theta_grid = 64;
  int z_grid = 64;
  double z_grid_limit = 8.0;
  int max_rounds = 200;
  double relative_tolerance = 1e-9;
};

struct OneWayCorrelation {
  CorrelationValue value;
  /// Optimal pure seed on the measured side.
  MeasurementSeed seed;
  int rounds;
};

/// J2 of the unmeasured side given a Gaussian measurement on `measured`.
///
/// Coarse theta x z grid over [0, pi) x [-8, 8] (ties go to smaller |z|, then
/// smaller theta), then alternating golden-section refinement in theta and z,
/// with z allowed out to +-20. Only two-mode states; throws NotConverged if
/// the relative improvement of the last round still exceeds the tolerance.
OneWayCorrelation classical_correlations(const CovarianceMatrix& sigma,
                                         const ModePartition& partition, Side measured,
                                         const MeasurementSearch& search = {});

/// D2 = I2 - J2 at the J2-optimal seed.
OneWayCorrelation discord(const CovarianceMatrix& sigma, const ModePartition& partition,
                          Side measured, const MeasurementSearch& search = {});

}  // namespace gaussia
