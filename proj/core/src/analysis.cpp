#include "gaussia/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "gaussia/closed_forms.hpp"
#include "gaussia/error.hpp"

namespace gaussia {

namespace {

// Runs body(i) for i in [0, n) on worker_count() threads. The first
// exception thrown by any worker is rethrown after all have joined.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<double> r_axis(int points) {
  if (points < 2) throw InvalidArgument("figure needs at least two points");
  std::vector<double> r(points);
  for (int i = 0; i < points; ++i) r[i] = 3.0 * i / (points - 1);
  return r;
}

}  // namespace

double unit_squeezing() { return 0.5 * std::acosh(std::numbers::e); }

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GAUSSIA_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace {

AnalysisReport pair_analysis(const FrameScenario& scenario, const AnalysisOptions& options) {
  scenario.validate();
  const CovarianceMatrix sigma = observed_pair(scenario);
  const ModePartition p = ModePartition::bipartite({modes::A}, {modes::R});

  AnalysisReport rep;
  rep.scenario = scenario;
  rep.i2 = mutual_information(sigma, p).value();

  const auto by_rob = classical_correlations(sigma, p, Side::B, options.search);
  const auto by_alice = classical_correlations(sigma, p, Side::A, options.search);
  rep.j2_A_given_R = by_rob.value.value();
  rep.j2_R_given_A = by_alice.value.value();
  rep.seed_A_given_R = by_rob.seed;
  rep.seed_R_given_A = by_alice.seed;
  rep.d2_A_given_R = CorrelationValue(rep.i2 - rep.j2_A_given_R, CorrelationKind::discord).value();
  rep.d2_R_given_A = CorrelationValue(rep.i2 - rep.j2_R_given_A, CorrelationKind::discord).value();

  rep.e2_closed = closed::e2(scenario.s, scenario.alice(), scenario.rob());
  const auto est = entanglement_estimate(sigma, p, options.entanglement);
  rep.e2_estimate = est.value.value();
  rep.e2_residual = est.penalty_residual;
  return rep;
}

}  // namespace

AnalysisReport analyze(const FrameScenario& scenario, const AnalysisOptions& options) {
  AnalysisReport rep = pair_analysis(scenario, options);
  if (scenario.setting == Setting::a) {
    rep.tripartite = tripartite_report(scenario.s, scenario.r, options.entanglement, options.search);
  }
  return rep;
}

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidArgument("no column named " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out += ',';
    out += table.columns[j];
  }
  out += '\n';
  char buf[32];
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.12g", row[j]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void SweepSpec::validate() const {
  scenario.validate();
  if (!std::isfinite(start) || !std::isfinite(stop) || start > stop) {
    throw InvalidArgument("sweep: need finite start <= stop");
  }
  if (steps < 2) throw InvalidArgument("sweep: steps must be at least 2");
  if (start < 0.0) throw InvalidArgument("sweep: parameters are nonnegative");
  if (parameter == SweepParameter::r && scenario.setting == Setting::inertial) {
    throw InvalidArgument("sweep: r has no effect in the inertial setting");
  }
  if (parameter == SweepParameter::w && scenario.setting != Setting::b) {
    throw InvalidArgument("sweep: w is only defined in setting b");
  }
}

std::vector<FrameScenario> SweepSpec::points() const {
  validate();
  std::vector<FrameScenario> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double v = i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1);
    FrameScenario sc = scenario;
    switch (parameter) {
      case SweepParameter::s: sc.s = v; break;
      case SweepParameter::r: sc.r = v; break;
      case SweepParameter::w: sc.w = v; break;
    }
    out.push_back(sc);
  }
  return out;
}

std::vector<AnalysisReport> run_sweep(const SweepSpec& spec, const AnalysisOptions& options) {
  const auto pts = spec.points();
  std::vector<std::optional<AnalysisReport>> slots(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { slots[i] = analyze(pts[i], options); });
  std::vector<AnalysisReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Table sweep_table(const std::vector<AnalysisReport>& reports) {
  Table t;
  t.columns = {"s",           "w",           "r",           "I2",        "J2_A_given_R",
               "J2_R_given_A", "D2_A_given_R", "D2_R_given_A", "E2_closed", "E2"};
  for (const auto& rep : reports) {
    t.rows.push_back({rep.scenario.s, rep.scenario.alice(), rep.scenario.rob(), rep.i2,
                      rep.j2_A_given_R, rep.j2_R_given_A, rep.d2_A_given_R, rep.d2_R_given_A,
                      rep.e2_closed, rep.e2_estimate});
  }
  return t;
}

std::string to_string(Figure figure) {
  switch (figure) {
    case Figure::fig2a: return "fig2a";
    case Figure::fig2b: return "fig2b";
    case Figure::fig3: return "fig3";
  }
  return "unknown";
}

Figure parse_figure(const std::string& text) {
  if (text == "fig2a") return Figure::fig2a;
  if (text == "fig2b") return Figure::fig2b;
  if (text == "fig3") return Figure::fig3;
  throw InvalidArgument("unknown figure '" + text + "'");
}

Table figure_table(Figure figure, int points, const AnalysisOptions& options) {
  const double s = unit_squeezing();
  const auto r = r_axis(points);
  Table t;
  t.rows.resize(r.size());

  if (figure == Figure::fig3) {
    t.columns = {"r",           "Q2_trip",          "E2_R_vs_ARbar", "E2_R_A",
                 "E2_R_Rbar",   "D2_R_given_ARbar", "D2_R_given_A",  "D2_R_given_Rbar"};
    parallel_for(r.size(), [&](std::size_t i) {
      const auto rep = tripartite_report(s, r[i], options.entanglement, options.search);
      t.rows[i] = {r[i],          closed::q2_tripartite(s, r[i]), rep.e2_R_vs_ARbar,
                   rep.e2_R_A,    rep.e2_R_Rbar,                  rep.d2_R_given_ARbar,
                   rep.d2_R_given_A, rep.d2_R_given_Rbar};
    });
    return t;
  }

  t.columns = {"r",            "I2",           "J2_A_given_R", "J2_R_given_A",
               "D2_A_given_R", "D2_R_given_A", "E2"};
  const double w_per_r = figure == Figure::fig2b ? 2.0 : 0.0;
  parallel_for(r.size(), [&](std::size_t i) {
    const FrameScenario sc = w_per_r > 0.0 ? FrameScenario::setting_b(s, w_per_r * r[i], r[i])
                                           : FrameScenario::setting_a(s, r[i]);
    const auto rep = pair_analysis(sc, options);
    t.rows[i] = {r[i],
                 rep.i2,
                 rep.j2_A_given_R,
                 rep.j2_R_given_A,
                 rep.d2_A_given_R,
                 rep.d2_R_given_A,
                 rep.e2_estimate};
  });
  return t;
}

}  // namespace gaussia
