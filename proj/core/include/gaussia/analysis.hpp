#pragma once

// Scenario reports, parameter sweeps and the figure tables.

#include <optional>
#include <string>
#include <vector>

#include "gaussia/measurement.hpp"
#include "gaussia/renyi.hpp"
#include "gaussia/tripartite.hpp"
#include "gaussia/unruh.hpp"

namespace gaussia {

/// s = arccosh(e)/2, where the inertial correlations are exactly 1 nat.
double unit_squeezing();

struct AnalysisOptions {
  EntanglementOptions entanglement;
  MeasurementSearch search;
};

/// Numeric correlations of the observed pair (A, R). J2(A|R) is Alice's
/// information gain when Rob measures.
struct AnalysisReport {
  FrameScenario scenario;
  double i2 = 0.0;
  double j2_A_given_R = 0.0;
  double j2_R_given_A = 0.0;
  double d2_A_given_R = 0.0;
  double d2_R_given_A = 0.0;
  MeasurementSeed seed_A_given_R = MeasurementSeed::heterodyne();
  MeasurementSeed seed_R_given_A = MeasurementSeed::heterodyne();
  double e2_closed = 0.0;
  double e2_estimate = 0.0;
  double e2_residual = 0.0;
  std::optional<TripartiteReport> tripartite;  // setting a only
};

AnalysisReport analyze(const FrameScenario& scenario, const AnalysisOptions& options = {});

/// Numeric table with named columns, rows in evaluation order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
};

/// Header plus one line per row, 12 significant digits, '\n' endings.
std::string to_csv(const Table& table);

enum class SweepParameter { s, r, w };
enum class SweepFormat { csv, json };

struct SweepSpec {
  FrameScenario scenario;
  SweepParameter parameter = SweepParameter::r;
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;
  std::string out;
  SweepFormat format = SweepFormat::csv;

  /// Throws InvalidArgument when start > stop, steps < 2, or the parameter
  /// does not act in the scenario's setting (r for inertial, w outside b).
  void validate() const;
  std::vector<FrameScenario> points() const;
};

/// Evaluates `analyze` for every sweep point, in parallel, in input order.
std::vector<AnalysisReport> run_sweep(const SweepSpec& spec, const AnalysisOptions& options = {});

/// s, w, r, I2, J2 and D2 both ways, E2_closed, E2.
Table sweep_table(const std::vector<AnalysisReport>& reports);

enum class Figure { fig2a, fig2b, fig3 };

std::string to_string(Figure figure);
/// Parses "fig2a", "fig2b" or "fig3".
Figure parse_figure(const std::string& text);

/// r in [0, 3] at s = unit_squeezing(). fig2a has w = 0 and fig2b w = 2r,
/// with columns r, I2, J2_A_given_R, J2_R_given_A, D2_A_given_R,
/// D2_R_given_A, E2. fig3 has r, Q2_trip and the six residual components.
Table figure_table(Figure figure, int points = 121, const AnalysisOptions& options = {});

/// Worker count: hardware concurrency capped by GAUSSIA_THREADS when set.
unsigned worker_count();

}  // namespace gaussia
