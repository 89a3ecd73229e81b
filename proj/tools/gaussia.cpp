#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gaussia/analysis.hpp"
#include "gaussia/closed_forms.hpp"
#include "gaussia/error.hpp"
#include "gaussia/serialization.hpp"
#include "gaussia/validation.hpp"

namespace {

enum Exit : int { ok = 0, failed = 1, bad_input = 2, numeric = 3, unwritable = 4 };

// Output path could not be opened or written.
struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gaussia::FormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open " + path + " for writing");
  out << bytes;
  out.flush();
  if (!out) throw WriteError("failed writing " + path);
}

int analyze(const std::string& source, bool dump) {
  const auto scenario = gaussia::scenario_from_json(gaussia::parse_json(slurp(source)));
  auto report = gaussia::to_json(gaussia::analyze(scenario));
  if (dump) {
    report["matrices"] = {{"global", gaussia::to_json(gaussia::global_cm(scenario))},
                          {"observed_pair", gaussia::to_json(gaussia::observed_pair(scenario))}};
  }
  std::cout << report.dump(2) << '\n';
  return ok;
}

int sweep(const std::string& spec_path) {
  const auto spec = gaussia::sweep_spec_from_json(gaussia::parse_json(slurp(spec_path)));
  const auto reports = gaussia::run_sweep(spec);
  std::string bytes;
  if (spec.format == gaussia::SweepFormat::csv) {
    bytes = gaussia::to_csv(gaussia::sweep_table(reports));
  } else {
    gaussia::Json all = gaussia::Json::array();
    for (const auto& r : reports) all.push_back(gaussia::to_json(r));
    bytes = all.dump(2) + '\n';
  }
  write_file(spec.out, bytes);
  std::cerr << "wrote " << reports.size() << " points to " << spec.out << '\n';
  return ok;
}

int figure(const std::string& which, const std::string& out, int points) {
  const auto fig = gaussia::parse_figure(which);
  write_file(out, gaussia::to_csv(gaussia::figure_table(fig, points)));
  std::cerr << "wrote " << which << " to " << out << '\n';
  return ok;
}

int validate(const std::string& grid, double perturb_i2) {
  gaussia::ValidationHooks hooks;
  if (perturb_i2 != 0.0) {
    hooks.i2_reference = [perturb_i2](double s, double w, double r) {
      return gaussia::closed::i2(s, w, r) + perturb_i2;
    };
  }
  hooks.on_check = [](const gaussia::CheckResult& c) {
    std::cout << gaussia::format_check(c) << '\n' << std::flush;
  };
  const auto report = gaussia::run_validation(gaussia::parse_grid(grid), hooks);
  for (int c = 1; c <= gaussia::kCriterionCount; ++c) {
    std::cout << "criterion " << c << ": " << (report.criterion_passed(c) ? "PASS" : "FAIL") << '\n';
  }
  if (report.passed()) {
    std::cout << "all " << report.checks.size() << " checks passed\n";
    return ok;
  }
  for (const auto* f : report.failures()) {
    std::cerr << "failing check: criterion " << f->criterion << " " << f->name << " (delta "
              << f->delta << ", tolerance " << f->tolerance << ", at " << f->where << ")\n";
  }
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi-2 Gaussian correlations of field modes seen by accelerated observers"};
  app.require_subcommand(1);

  std::string scenario_path;
  bool dump = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report every measure for one scenario (JSON)");
  analyze_cmd->add_option("--scenario", scenario_path, "Scenario JSON file, or - for stdin")
      ->required();
  analyze_cmd->add_flag("--dump", dump, "Include the global and observed covariance matrices");

  std::string spec_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a scenario over a parameter range");
  sweep_cmd->add_option("--spec", spec_path, "Sweep specification JSON file")->required();

  std::string which, out;
  int points = 121;
  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV data behind a figure");
  figure_cmd->add_option("--which", which, "fig2a, fig2b or fig3")
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig3"}));
  figure_cmd->add_option("--out", out, "Output CSV path")->required();
  figure_cmd->add_option("--points", points, "Samples over r in [0, 3]")
      ->check(CLI::Range(2, 100000));

  std::string grid = "coarse";
  double perturb_i2 = 0.0;
  auto* validate_cmd = app.add_subcommand("validate", "Run the acceptance checks");
  validate_cmd->add_option("--grid", grid, "coarse or fine")
      ->check(CLI::IsMember({"coarse", "fine"}));
  validate_cmd->add_option("--perturb-i2", perturb_i2)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*analyze_cmd) return analyze(scenario_path, dump);
    if (*sweep_cmd) return sweep(spec_path);
    if (*figure_cmd) return figure(which, out, points);
    return validate(grid, perturb_i2);
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return unwritable;
  } catch (const gaussia::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const gaussia::Error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return numeric;
  }
}
