#include "gaussia/serialization.hpp"

#include <cmath>

#include "gaussia/error.hpp"

namespace gaussia {

namespace {

const Json& object(const Json& j, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
  return j;
}

double number(const Json& j, const char* key, std::optional<double> fallback = std::nullopt) {
  const auto it = j.find(key);
  if (it == j.end()) {
    if (fallback) return *fallback;
    throw FormatError(std::string("missing key '") + key + "'");
  }
  if (!it->is_number()) throw FormatError(std::string("'") + key + "' must be a number");
  return it->get<double>();
}

std::string text(const Json& j, const char* key, std::optional<std::string> fallback = {}) {
  const auto it = j.find(key);
  if (it == j.end()) {
    if (fallback) return *fallback;
    throw FormatError(std::string("missing key '") + key + "'");
  }
  if (!it->is_string()) throw FormatError(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const CovarianceMatrix& sigma) {
  const Matrix& m = sigma.entries();
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(m(i, k));
  return {{"modes", sigma.modes()}, {"entries", std::move(entries)}};
}

CovarianceMatrix covariance_from_json(const Json& j) {
  object(j, "matrix");
  const auto modes = j.find("modes");
  if (modes == j.end() || !modes->is_number_integer() || modes->get<long long>() < 1) {
    throw FormatError("matrix: 'modes' must be a positive integer");
  }
  const auto entries = j.find("entries");
  if (entries == j.end() || !entries->is_array()) {
    throw FormatError("matrix: 'entries' must be an array");
  }
  const auto dim = static_cast<Eigen::Index>(2 * modes->get<long long>());
  if (entries->size() != static_cast<std::size_t>(dim * dim)) {
    throw FormatError("matrix: expected " + std::to_string(dim * dim) + " entries");
  }
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim * dim; ++i) {
    const Json& e = (*entries)[static_cast<std::size_t>(i)];
    if (!e.is_number()) throw FormatError("matrix: entries must be numbers");
    m(i / dim, i % dim) = e.get<double>();
  }
  return CovarianceMatrix(std::move(m));
}

Json to_json(const FrameScenario& scenario) {
  return {{"setting", std::string(to_string(scenario.setting))},
          {"s", scenario.s},
          {"r", scenario.r},
          {"w", scenario.w}};
}

FrameScenario scenario_from_json(const Json& j) {
  object(j, "scenario");
  FrameScenario sc;
  sc.setting = parse_setting(text(j, "setting"));
  sc.s = number(j, "s");
  sc.r = number(j, "r", 0.0);
  sc.w = number(j, "w", 0.0);
  sc.validate();
  return sc;
}

Json to_json(const MeasurementSeed& seed) {
  return {{"theta", seed.theta()}, {"log_squeeze", seed.log_squeeze()}};
}

Json to_json(const TripartiteReport& rep) {
  return {{"E2_R_vs_ARbar", rep.e2_R_vs_ARbar},
          {"E2_R_A", rep.e2_R_A},
          {"E2_R_Rbar", rep.e2_R_Rbar},
          {"D2_R_given_ARbar", rep.d2_R_given_ARbar},
          {"D2_R_given_A", rep.d2_R_given_A},
          {"D2_R_given_Rbar", rep.d2_R_given_Rbar},
          {"residual_entanglement", rep.residual_entanglement},
          {"residual_discord", rep.residual_discord}};
}

Json to_json(const closed::ClosedFormReport& rep) {
  return {{"C2_inertial", rep.c2_inertial},
          {"I2", rep.i2},
          {"J2_A_given_R", optional_number(rep.j2_A_given_R)},
          {"J2_R_given_A", rep.j2_R_given_A},
          {"D2_A_given_R", optional_number(rep.d2_A_given_R)},
          {"D2_R_given_A", rep.d2_R_given_A},
          {"E2", rep.e2},
          {"Q2_trip", optional_number(rep.q2_tripartite)}};
}

Json to_json(const AnalysisReport& rep) {
  Json out = {
      {"scenario", to_json(rep.scenario)},
      {"I2", rep.i2},
      {"J2", {{"A_given_R", rep.j2_A_given_R}, {"R_given_A", rep.j2_R_given_A}}},
      {"D2", {{"A_given_R", rep.d2_A_given_R}, {"R_given_A", rep.d2_R_given_A}}},
      {"E2",
       {{"closed", rep.e2_closed},
        {"estimate", rep.e2_estimate},
        {"penalty_residual", rep.e2_residual}}},
      {"seeds",
       {{"A_given_R", to_json(rep.seed_A_given_R)}, {"R_given_A", to_json(rep.seed_R_given_A)}}},
      {"closed", to_json(closed::report(rep.scenario))},
  };
  out["tripartite"] = rep.tripartite ? to_json(*rep.tripartite) : Json(nullptr);
  return out;
}

SweepSpec sweep_spec_from_json(const Json& j) {
  object(j, "sweep");
  const auto sc = j.find("scenario");
  if (sc == j.end()) throw FormatError("missing key 'scenario'");

  SweepSpec spec;
  spec.scenario = scenario_from_json(*sc);
  const std::string param = text(j, "parameter");
  if (param == "s") {
    spec.parameter = SweepParameter::s;
  } else if (param == "r") {
    spec.parameter = SweepParameter::r;
  } else if (param == "w") {
    spec.parameter = SweepParameter::w;
  } else {
    throw InvalidArgument("sweep: parameter must be s, r or w");
  }
  spec.start = number(j, "start");
  spec.stop = number(j, "stop");
  const auto steps = j.find("steps");
  if (steps == j.end() || !steps->is_number_integer()) {
    throw FormatError("sweep: 'steps' must be an integer");
  }
  const long long n = steps->get<long long>();
  if (n < 2 || n > 1000000) throw InvalidArgument("sweep: steps must be in [2, 1e6]");
  spec.steps = static_cast<int>(n);
  spec.out = text(j, "out");
  const std::string format = text(j, "format", "csv");
  if (format == "csv") {
    spec.format = SweepFormat::csv;
  } else if (format == "json") {
    spec.format = SweepFormat::json;
  } else {
    throw InvalidArgument("sweep: format must be csv or json");
  }
  spec.validate();
  return spec;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace gaussia
