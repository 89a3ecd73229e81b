#pragma once

// JSON shapes used by the command-line tool.
//
//   matrix    {"modes": N, "entries": [4 N^2 doubles, row-major]}
//   scenario  {"setting": "inertial" | "a" | "b", "s": f, "r": f, "w": f}
//   sweep     {"scenario": {...}, "parameter": "s" | "r" | "w",
//              "start": f, "stop": f, "steps": n, "out": path,
//              "format": "csv" | "json"}
//
// Readers throw FormatError for wrong shapes or types and InvalidArgument
// for well-formed but out-of-range values.

#include <nlohmann/json.hpp>

#include "gaussia/analysis.hpp"
#include "gaussia/closed_forms.hpp"
#include "gaussia/phase_space.hpp"
#include "gaussia/unruh.hpp"

namespace gaussia {

using Json = nlohmann::json;

Json to_json(const CovarianceMatrix& sigma);
CovarianceMatrix covariance_from_json(const Json& j);

/// r and w may be omitted and default to 0.
Json to_json(const FrameScenario& scenario);
FrameScenario scenario_from_json(const Json& j);

Json to_json(const MeasurementSeed& seed);
Json to_json(const TripartiteReport& report);
Json to_json(const closed::ClosedFormReport& report);
Json to_json(const AnalysisReport& report);

/// "format" defaults to csv; "out" is required.
SweepSpec sweep_spec_from_json(const Json& j);

/// Parses text, mapping syntax errors to FormatError.
Json parse_json(const std::string& text);

}  // namespace gaussia
