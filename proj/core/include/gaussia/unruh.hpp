#pragma once

// Two field modes A (Alice) and R (Rob), initially in a two-mode squeezed
// state, described by observers that may be uniformly accelerated. Each
// accelerated observer's mode is spread over Rindler regions I and II by a
// two-mode squeezer of strength r (Rob) or w (Alice); the region-II partners
// are the "bar" modes.
//
// Storage order: setting a is (A, R, Rbar); setting b is (A, R, Abar, Rbar).

#include <cstddef>
#include <string_view>

#include "gaussia/phase_space.hpp"

namespace gaussia {

enum class Setting { inertial, a, b };

std::string_view to_string(Setting setting);
/// Parses "inertial", "a" or "b".
Setting parse_setting(std::string_view text);

namespace modes {
inline constexpr std::size_t A = 0;
inline constexpr std::size_t R = 1;
inline constexpr std::size_t Rbar_a = 2;
inline constexpr std::size_t Abar_b = 2;
inline constexpr std::size_t Rbar_b = 3;
}  // namespace modes

struct FrameScenario {
  Setting setting = Setting::inertial;
  double s = 0.0;
  double r = 0.0;
  double w = 0.0;

  static FrameScenario inertial(double s) { return {Setting::inertial, s, 0.0, 0.0}; }
  static FrameScenario setting_a(double s, double r) { return {Setting::a, s, r, 0.0}; }
  static FrameScenario setting_b(double s, double w, double r) { return {Setting::b, s, r, w}; }

  /// Throws InvalidArgument for negative or non-finite parameters.
  void validate() const;
  /// r as seen by the construction (0 when inertial).
  double rob() const noexcept { return setting == Setting::inertial ? 0.0 : r; }
  /// w as seen by the construction (0 unless setting b).
  double alice() const noexcept { return setting == Setting::b ? w : 0.0; }

  friend bool operator==(const FrameScenario&, const FrameScenario&) = default;
};

/// Natural units: hbar = k_B = c = 1.
struct UnruhParameters {
  double mode_frequency = 1.0;
  double proper_acceleration = 0.0;
  double temperature = 0.0;
};

enum class UnruhInput { acceleration, temperature };

/// T = a / (2 pi).
double unruh_temperature(double proper_acceleration);

/// r >= 0 with cosh^-2 r = 1 - exp(-omega / T), evaluated as
/// atanh(exp(-omega / 2T)). Throws InvalidArgument for nonpositive inputs.
double acceleration_parameter(const UnruhParameters& params, UnruhInput given);

CovarianceMatrix inertial_pair(double s);
CovarianceMatrix setting_a(double s, double r);
CovarianceMatrix setting_b(double s, double w, double r);

/// Full pure CM of the scenario (2, 3 or 4 modes).
CovarianceMatrix global_cm(const FrameScenario& scenario);

/// Reduction of global_cm onto (A, R).
CovarianceMatrix observed_pair(const FrameScenario& scenario);

}  // namespace gaussia
