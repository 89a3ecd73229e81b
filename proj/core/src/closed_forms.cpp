#include "gaussia/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussia/error.hpp"
#include "gaussia/log_real.hpp"

namespace gaussia::closed {

namespace {

constexpr double kLogStableThreshold = 30.0;

void require(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InvalidArgument(std::string(name) + " must be finite and nonnegative");
  }
}

template <class T>
struct Hyp;

template <>
struct Hyp<double> {
  static double cosh(double x) { return std::cosh(x); }
  static double sinh(double x) { return std::sinh(x); }
  static double log(double v) { return std::log(v); }
};

template <>
struct Hyp<LogReal> {
  static LogReal cosh(double x) { return LogReal::cosh(x); }
  static LogReal sinh(double x) { return LogReal::sinh(x); }
  static double log(const LogReal& v) {
    if (v.sign() <= 0) throw Error("closed form: logarithm of a nonpositive quantity");
    return v.log_abs();
  }
};

bool large(double s, double w, double r) {
  return 2.0 * std::max({s, w, r}) > kLogStableThreshold;
}

template <class F>
double dispatch(double s, double w, double r, F&& f) {
  return large(s, w, r) ? f(Hyp<LogReal>{}) : f(Hyp<double>{});
}

}  // namespace

double c2_inertial(double s) {
  require(s, "s");
  return 2.0 * s > kLogStableThreshold ? log_cosh(2.0 * s) : std::log(std::cosh(2.0 * s));
}

double j2_A_given_R(double s) { return c2_inertial(s); }

double i2(double s, double w, double r) {
  require(s, "s");
  require(w, "w");
  require(r, "r");
  if (s == 0.0) return 0.0;
  return dispatch(s, w, r, [&](auto h) {
    using H = decltype(h);
    const auto c2s = H::cosh(2 * s);
    const auto chr = H::cosh(r), shr = H::sinh(r);
    const auto chw = H::cosh(w), shw = H::sinh(w);
    const auto chs = H::cosh(s), shs = H::sinh(s);
    const auto num = (chr * chr * c2s + shr * shr) * (c2s * chw * chw + shw * shw);
    const auto den = H::cosh(2 * r) * chs * chs * H::cosh(2 * w) - shs * shs;
    return H::log(num / den);
  });
}

double j2_R_given_A(double s, double r) {
  require(s, "s");
  require(r, "r");
  if (s == 0.0) return 0.0;
  return dispatch(s, 0.0, r, [&](auto h) {
    using H = decltype(h);
    const auto chr = H::cosh(r), shr = H::sinh(r);
    return H::log((chr * chr * H::cosh(2 * s) + shr * shr) / H::cosh(2 * r));
  });
}

double d2_limit_R_given_A(double s) {
  require(s, "s");
  return dispatch(s, 0.0, 0.0, [&](auto h) {
    using H = decltype(h);
    const auto chs = H::cosh(s);
    return H::log(H::cosh(2 * s) / (chs * chs));
  });
}

bool sudden_death(double s, double w, double r) {
  require(s, "s");
  require(w, "w");
  require(r, "r");
  if (w == 0.0 || r == 0.0) return s == 0.0;
  // tanh s <= sinh w sinh r, compared in log space.
  if (s == 0.0) return true;
  return std::log(std::tanh(s)) <= log_sinh(w) + log_sinh(r);
}

double e2(double s, double w, double r) {
  require(s, "s");
  require(w, "w");
  require(r, "r");
  if (w == 0.0) {
    return dispatch(s, 0.0, r, [&](auto h) {
      using H = decltype(h);
      const auto c2s = H::cosh(2 * s), c2r = H::cosh(2 * r);
      const auto shr = H::sinh(r);
      const auto num = (c2r + 3.0) * c2s + 2.0 * shr * shr;
      const auto den = 2.0 * shr * shr * c2s + c2r + 3.0;
      return H::log(num / den);
    });
  }
  if (sudden_death(s, w, r)) return 0.0;
  const double value = dispatch(s, w, r, [&](auto h) {
    using H = decltype(h);
    const auto sw_sr = H::sinh(w) * H::sinh(r);
    const auto sh2s = H::sinh(2 * s);
    const auto c2w = H::cosh(2 * w), c2r = H::cosh(2 * r);
    const auto chs = H::cosh(s), shs = H::sinh(s);
    const auto num = -4.0 * sw_sr * sh2s + 2.0 * c2w * c2r * chs * chs + 3.0 * H::cosh(2 * s) - 1.0;
    const auto den = 2.0 * (2.0 * sw_sr * sh2s + chs * chs * (c2w + c2r) - 2.0 * shs * shs);
    return H::log(num / den);
  });
  return std::max(0.0, value);
}

double q2_tripartite(double s, double r) {
  require(s, "s");
  require(r, "r");
  if (s == 0.0) return 0.0;
  return dispatch(s, 0.0, r, [&](auto h) {
    using H = decltype(h);
    const auto c2s = H::cosh(2 * s), c2r = H::cosh(2 * r);
    const auto chr = H::cosh(r), shr = H::sinh(r);
    const auto num = (chr * chr * c2s + shr * shr) * (2.0 * shr * shr * c2s + c2r + 3.0);
    const auto den = c2r * ((c2r + 3.0) * c2s + 2.0 * shr * shr);
    return H::log(num / den);
  });
}

ClosedFormReport report(const FrameScenario& scenario) {
  scenario.validate();
  const double s = scenario.s;
  const double r = scenario.rob();
  const double w = scenario.alice();
  ClosedFormReport out;
  out.scenario = scenario;
  out.c2_inertial = c2_inertial(s);
  out.i2 = i2(s, w, r);
  out.j2_R_given_A = j2_R_given_A(s, r);
  out.d2_R_given_A = std::max(0.0, out.i2 - out.j2_R_given_A);
  out.e2 = e2(s, w, r);
  if (scenario.setting != Setting::b) {
    out.j2_A_given_R = j2_A_given_R(s);
    out.d2_A_given_R = std::max(0.0, out.i2 - *out.j2_A_given_R);
    out.q2_tripartite = q2_tripartite(s, r);
  }
  return out;
}

}  // namespace gaussia::closed
