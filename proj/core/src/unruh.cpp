#include "gaussia/unruh.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussia/error.hpp"

namespace gaussia {

namespace {

void require_parameter(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InvalidArgument(std::string(name) + " must be finite and nonnegative");
  }
}

}  // namespace

std::string_view to_string(Setting setting) {
  switch (setting) {
    case Setting::inertial: return "inertial";
    case Setting::a: return "a";
    case Setting::b: return "b";
  }
  return "unknown";
}

Setting parse_setting(std::string_view text) {
  if (text == "inertial") return Setting::inertial;
  if (text == "a") return Setting::a;
  if (text == "b") return Setting::b;
  throw InvalidArgument("unknown setting '" + std::string(text) + "'");
}

void FrameScenario::validate() const {
  require_parameter(s, "s");
  require_parameter(r, "r");
  require_parameter(w, "w");
}

double unruh_temperature(double proper_acceleration) {
  if (!(proper_acceleration > 0.0)) throw InvalidArgument("acceleration must be positive");
  return proper_acceleration / (2.0 * std::numbers::pi);
}

double acceleration_parameter(const UnruhParameters& params, UnruhInput given) {
  if (!(params.mode_frequency > 0.0) || !std::isfinite(params.mode_frequency)) {
    throw InvalidArgument("mode frequency must be positive");
  }
  const double temperature = given == UnruhInput::acceleration
                                 ? unruh_temperature(params.proper_acceleration)
                                 : params.temperature;
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("temperature must be positive");
  }
  // tanh^2 r = 1 - cosh^-2 r = exp(-omega / T)
  return std::atanh(std::exp(-0.5 * params.mode_frequency / temperature));
}

CovarianceMatrix inertial_pair(double s) {
  require_parameter(s, "s");
  return apply_symplectic(vacuum_cm(2), two_mode_squeezer(s, modes::A, modes::R, 2));
}

CovarianceMatrix setting_a(double s, double r) {
  require_parameter(s, "s");
  require_parameter(r, "r");
  const auto input = direct_sum(inertial_pair(s), vacuum_cm(1));
  return apply_symplectic(input, two_mode_squeezer(r, modes::R, modes::Rbar_a, 3));
}

CovarianceMatrix setting_b(double s, double w, double r) {
  require_parameter(s, "s");
  require_parameter(w, "w");
  require_parameter(r, "r");
  const auto input = direct_sum(inertial_pair(s), vacuum_cm(2));
  const auto channel = two_mode_squeezer(w, modes::A, modes::Abar_b, 4) *
                       two_mode_squeezer(r, modes::R, modes::Rbar_b, 4);
  return apply_symplectic(input, channel);
}

CovarianceMatrix global_cm(const FrameScenario& scenario) {
  scenario.validate();
  switch (scenario.setting) {
    case Setting::inertial: return inertial_pair(scenario.s);
    case Setting::a: return setting_a(scenario.s, scenario.r);
    case Setting::b: return setting_b(scenario.s, scenario.w, scenario.r);
  }
  throw InvalidArgument("unknown setting");
}

CovarianceMatrix observed_pair(const FrameScenario& scenario) {
  const std::size_t keep[] = {modes::A, modes::R};
  return partial_trace(global_cm(scenario), keep);
}

}  // namespace gaussia
