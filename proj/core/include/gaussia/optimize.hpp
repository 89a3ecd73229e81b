#pragma once

// Derivative-free minimizers used by the measurement and convex-roof searches.

#include <functional>

#include <Eigen/Dense>

namespace gaussia::optimize {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a minimum of f on [lo, hi].
///
/// Assumes f is unimodal on the bracket. Stops when the bracket is narrower
/// than x_tolerance * max(1, |x|) or after max_evaluations calls. The returned
/// point is the best one evaluated, so endpoints are reported exactly when the
/// minimum sits on the boundary.
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double x_tolerance = 1e-12, int max_evaluations = 200);

struct NelderMeadOptions {
  int max_evaluations = 2000;
  double initial_step = 0.3;
  /// Converged when the spread of simplex values is below this.
  double f_tolerance = 1e-14;
  /// ... and the simplex diameter is below this.
  double x_tolerance = 1e-10;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Standard Nelder-Mead simplex (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) with an axis-aligned initial simplex.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

}  // namespace gaussia::optimize
