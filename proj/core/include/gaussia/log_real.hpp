#pragma once

// Signed real stored as sign * exp(log_abs). Lets closed-form ratios of
// hyperbolic functions be evaluated for arguments where cosh/sinh overflow or
// where the products of several of them would.

#include <cmath>
#include <limits>
#include <numbers>

namespace gaussia {

/// ln cosh(x), exact to rounding for all finite x.
inline double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// ln sinh(x) for x > 0.
inline double log_sinh(double x) {
  return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

class LogReal {
 public:
  constexpr LogReal() = default;
  LogReal(double v)  // NOLINT(google-explicit-constructor): arithmetic literal promotion
      : sign_(v > 0 ? 1 : (v < 0 ? -1 : 0)),
        log_abs_(v == 0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(v))) {}

  static LogReal from_log(double log_abs, int sign = 1) {
    LogReal out;
    out.sign_ = sign;
    out.log_abs_ = sign == 0 ? -std::numeric_limits<double>::infinity() : log_abs;
    return out;
  }

  static LogReal cosh(double x) { return from_log(log_cosh(x)); }
  static LogReal sinh(double x) {
    if (x == 0.0) return LogReal(0.0);
    return from_log(log_sinh(std::abs(x)), x > 0 ? 1 : -1);
  }

  int sign() const noexcept { return sign_; }
  double log_abs() const noexcept { return log_abs_; }
  double to_double() const { return sign_ * std::exp(log_abs_); }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    return from_log(a.log_abs_ + b.log_abs_, a.sign_ * b.sign_);
  }
  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    return from_log(a.log_abs_ - b.log_abs_, a.sign_ * b.sign_);
  }
  friend LogReal operator-(const LogReal& a) { return from_log(a.log_abs_, -a.sign_); }
  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const bool a_big = a.log_abs_ >= b.log_abs_;
    const LogReal& hi = a_big ? a : b;
    const LogReal& lo = a_big ? b : a;
    const double ratio = std::exp(lo.log_abs_ - hi.log_abs_);
    if (hi.sign_ == lo.sign_) return from_log(hi.log_abs_ + std::log1p(ratio), hi.sign_);
    if (ratio == 1.0) return LogReal(0.0);
    return from_log(hi.log_abs_ + std::log1p(-ratio), hi.sign_);
  }
  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  friend bool operator<=(const LogReal& a, const LogReal& b) {
    return (a - b).sign_ <= 0;
  }

 private:
  int sign_ = 0;
  double log_abs_ = -std::numeric_limits<double>::infinity();
};

}  // namespace gaussia
