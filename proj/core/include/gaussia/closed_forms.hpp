#pragma once

// Analytic correlation formulas for the Unruh scenarios, in nats.
//
// These are reference oracles for the numeric pipeline. Whenever some
// hyperbolic argument (2s, 2w, 2r) exceeds 30 the formulas are evaluated in
// log space, so limits such as r = s = 25 neither overflow nor lose the O(1)
// ratio between exponentially large terms. All functions reject negative
// parameters with InvalidArgument.

#include <optional>

#include "gaussia/unruh.hpp"

namespace gaussia::closed {

/// Entanglement = classical = quantum correlations of the inertial pair:
/// ln cosh 2s.
double c2_inertial(double s);

/// Mutual information between A and R; setting a is w = 0.
double i2(double s, double w, double r);

/// J2(A|R), measurement by Rob: ln cosh 2s for any r.
double j2_A_given_R(double s);

/// J2(R|A), measurement by Alice, settings a and b alike:
/// ln[sech 2r (cosh^2 r cosh 2s + sinh^2 r)].
double j2_R_given_A(double s, double r);

/// r -> inf limit of D2(R|A) in setting a: ln[cosh 2s / cosh^2 s].
double d2_limit_R_given_A(double s);

/// Gaussian Renyi-2 entanglement between A and R. For w > 0 this is exactly
/// zero whenever tanh s <= sinh w sinh r.
double e2(double s, double w, double r);

/// True iff (s, w, r) lies in the separable region tanh s <= sinh w sinh r.
bool sudden_death(double s, double w, double r);

/// Genuine tripartite residual among A, R, Rbar in setting a.
double q2_tripartite(double s, double r);

struct ClosedFormReport {
  FrameScenario scenario;
  double c2_inertial = 0.0;
  double i2 = 0.0;
  /// Not available in closed form for setting b.
  std::optional<double> j2_A_given_R;
  double j2_R_given_A = 0.0;
  std::optional<double> d2_A_given_R;
  double d2_R_given_A = 0.0;
  double e2 = 0.0;
  /// Setting a (and inertial, where it is 0) only.
  std::optional<double> q2_tripartite;
};

ClosedFormReport report(const FrameScenario& scenario);

}  // namespace gaussia::closed
