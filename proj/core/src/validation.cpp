#include "gaussia/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "gaussia/analysis.hpp"
#include "gaussia/closed_forms.hpp"
#include "gaussia/error.hpp"
#include "gaussia/measurement.hpp"
#include "gaussia/renyi.hpp"
#include "gaussia/tripartite.hpp"
#include "gaussia/unruh.hpp"

namespace gaussia {

namespace {

constexpr std::uint64_t kPropertySeed = 0x9e3779b97f4a7c15ULL;

struct GridPoint {
  double s, w, r;
  FrameScenario scenario() const {
    if (w > 0.0) return FrameScenario::setting_b(s, w, r);
    return FrameScenario::setting_a(s, r);
  }
};

struct Grid {
  std::vector<double> s;
  std::vector<double> r;
  std::vector<double> w_per_r;
  std::vector<double> tripartite_r;
  int property_instances;

  std::vector<GridPoint> points() const {
    std::vector<GridPoint> out;
    for (double sv : s)
      for (double rv : r) {
        std::vector<double> ws;
        for (double k : w_per_r) {
          const double w = k * rv;
          if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
        }
        for (double w : ws) out.push_back({sv, w, rv});
      }
    return out;
  }
};

Grid make_grid(ValidationGrid g) {
  const double star = unit_squeezing();
  if (g == ValidationGrid::coarse) {
    return {{0.3, star, 1.5}, {0.0, 0.5, 1.0, 2.0}, {0.0, 1.0, 2.0}, {0.5, 1.0, 2.0}, 100};
  }
  std::vector<double> r;
  for (int i = 0; i <= 10; ++i) r.push_back(0.25 * i);
  return {{0.1, 0.3, 0.6, star, 1.2, 1.5, 2.0},
          r,
          {0.0, 0.5, 1.0, 2.0},
          {0.25, 0.5, 1.0, 1.5, 2.0, 2.5},
          400};
}

std::string at(double s, double w, double r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "s=%.6g w=%.6g r=%.6g", s, w, r);
  return buf;
}

// Accumulates the worst deviation of one named check.
class Check {
 public:
  Check(int criterion, std::string name, double tolerance) {
    result_.criterion = criterion;
    result_.name = std::move(name);
    result_.tolerance = tolerance;
    result_.delta = 0.0;
  }

  void deviation(double delta, const std::string& where) {
    if (std::isnan(delta)) delta = std::numeric_limits<double>::infinity();
    if (!seen_ || delta > result_.delta) {
      result_.delta = delta;
      result_.where = where;
    }
    seen_ = true;
  }

  void count(bool ok, const std::string& where) {
    if (!ok) {
      if (failures_ == 0) result_.where = where;
      ++failures_;
    }
    result_.delta = failures_;
    seen_ = true;
  }

  CheckResult finish() {
    result_.passed = seen_ && result_.delta <= result_.tolerance;
    if (!seen_) result_.where = "no points evaluated";
    return result_;
  }

 private:
  CheckResult result_;
  bool seen_ = false;
  int failures_ = 0;
};

const ModePartition& pair_split() {
  static const ModePartition p = ModePartition::bipartite({0}, {1});
  return p;
}

class Runner {
 public:
  Runner(ValidationGrid grid, const ValidationHooks& hooks)
      : grid_(make_grid(grid)), hooks_(hooks) {
    if (!hooks_.i2_reference) hooks_.i2_reference = [](double s, double w, double r) {
      return closed::i2(s, w, r);
    };
  }

  std::vector<CheckResult> run(int criterion) {
    out_.clear();
    switch (criterion) {
      case 1: inertial_normalization(); break;
      case 2: mutual_information_oracle(); break;
      case 3: classical_invariances(); break;
      case 4: limits(); break;
      case 5: entanglement(); break;
      case 6: tripartite(); break;
      case 7: ln2_gap(); break;
      case 8: properties(); break;
      case 9: figures(); break;
      default: throw InvalidArgument("no criterion " + std::to_string(criterion));
    }
    return std::move(out_);
  }

 private:
  void emit(Check& c) {
    out_.push_back(c.finish());
    if (hooks_.on_check) hooks_.on_check(out_.back());
  }

  void inertial_normalization() {
    const double s = unit_squeezing();
    const auto rep = analyze(FrameScenario::inertial(s));
    const std::string where = at(s, 0, 0);
    Check i2(1, "inertial I2 = 2", 1e-6);
    i2.deviation(std::abs(rep.i2 - 2.0), where);
    emit(i2);
    Check ones(1, "inertial J2, D2, E2 = 1", 1e-6);
    for (double v : {rep.j2_A_given_R, rep.j2_R_given_A, rep.d2_A_given_R, rep.d2_R_given_A,
                     rep.e2_estimate, rep.e2_closed})
      ones.deviation(std::abs(v - 1.0), where);
    emit(ones);
  }

  void mutual_information_oracle() {
    Check c(2, "I2 cross-check", 1e-9);
    for (const auto& p : grid_.points()) {
      const double num = mutual_information(observed_pair(p.scenario()), pair_split()).value();
      const double ref = hooks_.i2_reference(p.s, p.w, p.r);
      c.deviation(std::abs(num - ref) / std::max(std::abs(ref), 1e-300), at(p.s, p.w, p.r));
    }
    emit(c);
  }

  void classical_invariances() {
    Check rob(3, "J2(A|R) = ln cosh 2s in setting a", 1e-6);
    Check alice(3, "J2(R|A) equal in settings a and b", 1e-6);
    Check closed_form(3, "J2(R|A) closed form", 1e-6);
    for (double s : grid_.s)
      for (double r : grid_.r) {
        const auto sa = observed_pair(FrameScenario::setting_a(s, r));
        const double ja = classical_correlations(sa, pair_split(), Side::B).value.value();
        rob.deviation(std::abs(ja - closed::c2_inertial(s)), at(s, 0, r));
        const double ra = classical_correlations(sa, pair_split(), Side::A).value.value();
        closed_form.deviation(std::abs(ra - closed::j2_R_given_A(s, r)), at(s, 0, r));
        for (double k : grid_.w_per_r) {
          if (k == 0.0 || r == 0.0) continue;
          const auto sb = observed_pair(FrameScenario::setting_b(s, k * r, r));
          const double rb = classical_correlations(sb, pair_split(), Side::A).value.value();
          alice.deviation(std::abs(rb - ra), at(s, k * r, r));
        }
      }
    emit(rob);
    emit(alice);
    emit(closed_form);
  }

  void limits() {
    Check half(4, "I2 at r=25 -> ln cosh 2s", 1e-6);
    for (double s : grid_.s)
      half.deviation(std::abs(closed::i2(s, 0.0, 25.0) - closed::c2_inertial(s)), at(s, 0, 25));
    emit(half);

    Check bit(4, "C2 - J2(R|A) at s=r=25 -> ln 2", 1e-4);
    bit.deviation(
        std::abs(closed::c2_inertial(25.0) - closed::j2_R_given_A(25.0, 25.0) - std::numbers::ln2),
        at(25, 0, 25));
    emit(bit);

    const double s = 0.828727;
    const double target = 0.37989;
    Check d2(4, "D2(R|A) at r=10", 1e-3);
    const auto sigma = observed_pair(FrameScenario::setting_a(s, 10.0));
    d2.deviation(std::abs(discord(sigma, pair_split(), Side::A).value.value() - target),
                 at(s, 0, 10) + " numeric");
    d2.deviation(std::abs(closed::i2(s, 0.0, 10.0) - closed::j2_R_given_A(s, 10.0) - target),
                 at(s, 0, 10) + " closed");
    emit(d2);
  }

  void entanglement() {
    Check exact(5, "e2(s,0,0) = ln cosh 2s exactly", 0.0);
    std::mt19937_64 rng(kPropertySeed);
    std::uniform_real_distribution<double> sdist(0.0, 14.0);
    std::vector<double> ss = grid_.s;
    for (int i = 0; i < grid_.property_instances; ++i) ss.push_back(sdist(rng));
    for (double s : ss)
      exact.deviation(std::abs(closed::e2(s, 0.0, 0.0) - std::log(std::cosh(2.0 * s))),
                      at(s, 0, 0));
    emit(exact);

    Check agree(5, "E2 estimate vs closed form", 5e-3);
    Check below(5, "E2 estimate not below closed form - 2e-4", 2e-4);
    Check death(5, "E2 estimate in sudden-death region", 2e-4);
    for (const auto& p : grid_.points()) {
      const auto est =
          entanglement_estimate(observed_pair(p.scenario()), pair_split()).value.value();
      const double ref = closed::e2(p.s, p.w, p.r);
      const auto where = at(p.s, p.w, p.r);
      agree.deviation(std::abs(est - ref), where);
      below.deviation(std::max(0.0, ref - est), where);
      if (p.w > 0.0 && closed::sudden_death(p.s, p.w, p.r)) death.deviation(est, where);
    }
    emit(agree);
    emit(below);
    emit(death);

    Check boundary(5, "e2 continuous across sudden-death boundary", 1e-6);
    for (double s : grid_.s)
      for (double r : grid_.r) {
        if (r == 0.0) continue;
        const double wc = std::asinh(std::tanh(s) / std::sinh(r));
        const double lo = closed::e2(s, std::max(0.0, wc - 1e-4), r);
        const double hi = closed::e2(s, wc + 1e-4, r);
        boundary.deviation(std::abs(lo - hi), at(s, wc, r));
      }
    emit(boundary);
  }

  void tripartite() {
    Check discord_q2(6, "residual discord vs closed Q2", 1e-5);
    Check equality(6, "residual entanglement = residual discord", 1e-2);
    Check monogamy(6, "S2(R) >= E2(R:A) + E2(R:Rbar)", 5e-3);
    Check hub_d(6, "discord residual minimized at hub R", 0.0);
    Check hub_e(6, "entanglement residual minimized at hub R", 0.0);
    for (double s : grid_.s)
      for (double r : grid_.tripartite_r) {
        const auto where = at(s, 0, r);
        const auto rep = tripartite_report(s, r);
        discord_q2.deviation(std::abs(rep.residual_discord - closed::q2_tripartite(s, r)), where);
        equality.deviation(std::abs(rep.residual_entanglement - rep.residual_discord), where);
        monogamy.deviation(std::max(0.0, rep.e2_R_A + rep.e2_R_Rbar - rep.e2_R_vs_ARbar), where);
        const auto sigma3 = setting_a(s, r);
        hub_d.count(minimize_over_hub(sigma3, ResidualQuantity::discord).hub == modes::R, where);
        hub_e.count(minimize_over_hub(sigma3, ResidualQuantity::entanglement).hub == modes::R,
                    where);
      }
    emit(discord_q2);
    emit(equality);
    emit(monogamy);
    emit(hub_d);
    emit(hub_e);
  }

  void ln2_gap() {
    Check c(7, "C2 - Q2 at s=r=25 -> ln 2", 1e-4);
    c.deviation(
        std::abs(closed::c2_inertial(25.0) - closed::q2_tripartite(25.0, 25.0) - std::numbers::ln2),
        at(25, 0, 25));
    emit(c);
  }

  // Random symplectic exp(Omega H) for a random symmetric H.
  static Matrix random_symplectic(std::mt19937_64& rng, std::size_t n, double spread) {
    std::normal_distribution<double> g(0.0, spread);
    Matrix h(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j <= i; ++j) h(i, j) = h(j, i) = g(rng);
    return (symplectic_form(n) * h).exp();
  }

  static CovarianceMatrix random_state(std::mt19937_64& rng, std::size_t n, bool boundary) {
    std::uniform_real_distribution<double> nu(1.0, 3.0);
    Matrix d = Matrix::Zero(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      const double v = boundary && k == 0 ? 1.0 : nu(rng);
      d(2 * k, 2 * k) = d(2 * k + 1, 2 * k + 1) = v;
    }
    const Matrix s = random_symplectic(rng, n, 0.4);
    return CovarianceMatrix(Matrix(s * d * s.transpose()));
  }

  static SymplecticTransform random_local(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    return local_symplectic(angle(rng), z(rng), angle(rng), 0, 2) *
           local_symplectic(angle(rng), z(rng), angle(rng), 1, 2);
  }

  void properties() {
    std::mt19937_64 rng(kPropertySeed);
    const int n = grid_.property_instances;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Check inv_i2(8, "local invariance of I2", 1e-6);
    Check inv_pure(8, "local invariance of pure-state E2", 1e-6);
    Check inv_est(8, "local invariance of E2 estimate", 1e-6);
    Check spectrum(8, "symplectic spectrum under global symplectics", 1e-9);
    for (int i = 0; i < n; ++i) {
      const auto where = "instance " + std::to_string(i);
      const auto sigma = random_state(rng, 2, i % 2 == 0);
      const auto moved = apply_symplectic(sigma, random_local(rng));
      inv_i2.deviation(std::abs(mutual_information(sigma, pair_split()).value() -
                                mutual_information(moved, pair_split()).value()),
                       where);
      inv_est.deviation(std::abs(entanglement_estimate(sigma, pair_split()).value.value() -
                                 entanglement_estimate(moved, pair_split()).value.value()),
                        where);

      const auto pure = apply_symplectic(vacuum_cm(2), SymplecticTransform(random_symplectic(rng, 2, 0.5)));
      const auto pure_moved = apply_symplectic(pure, random_local(rng));
      inv_pure.deviation(std::abs(pure_state_entanglement(pure, pair_split()).value() -
                                  pure_state_entanglement(pure_moved, pair_split()).value()),
                         where);

      const std::size_t modes = 1 + i % 4;
      const auto st = random_state(rng, modes, false);
      const auto after =
          apply_symplectic(st, SymplecticTransform(random_symplectic(rng, modes, 0.3)));
      const auto a = symplectic_eigenvalues(st);
      const auto b = symplectic_eigenvalues(after);
      for (std::size_t k = 0; k < a.size(); ++k)
        spectrum.deviation(std::abs(a[k] - b[k]) / a[k], where);
      spectrum.deviation(std::abs(st.log_determinant() - after.log_determinant()) /
                             std::max(1.0, std::abs(st.log_determinant())),
                         where);
    }
    emit(inv_i2);
    emit(inv_pure);
    emit(inv_est);
    emit(spectrum);

    Check purity(8, "purity preserved by symplectics and scenarios", 1e-9);
    for (int i = 0; i < n; ++i) {
      const std::size_t modes = 1 + i % 4;
      const auto pure = apply_symplectic(
          vacuum_cm(modes), SymplecticTransform(random_symplectic(rng, modes, 0.5)));
      double worst = std::abs(pure.log_determinant());
      const FrameScenario sc = random_scenario(rng, 1.5);
      worst = std::max(worst, std::abs(global_cm(sc).determinant() - 1.0));
      purity.deviation(worst, "instance " + std::to_string(i));
    }
    emit(purity);

    Check bona(8, "bona fide classification", 0.0);
    for (int i = 0; i < n; ++i) {
      const auto where = "instance " + std::to_string(i);
      const std::size_t modes = 1 + i % 4;
      const auto st = random_state(rng, modes, i % 3 == 0);
      bona.count(is_bona_fide(st), where);
      const FrameScenario sc = random_scenario(rng);
      bona.count(is_bona_fide(global_cm(sc)) && is_bona_fide(observed_pair(sc)), where);
      const auto pure = apply_symplectic(
          vacuum_cm(modes), SymplecticTransform(random_symplectic(rng, modes, 0.5)));
      const double shrink = 1.0 - (1e-6 + 1e-2 * unit(rng));
      bona.count(!is_bona_fide(CovarianceMatrix(Matrix(shrink * pure.entries()))), where);
    }
    emit(bona);

    Check closed_nonneg(8, "closed forms nonnegative on [0,5]^3", 0.0);
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j)
        for (int k = 0; k <= 20; ++k) {
          const double s = 0.25 * i, w = 0.25 * j, r = 0.25 * k;
          double lowest = std::min({closed::c2_inertial(s), closed::i2(s, w, r),
                                    closed::j2_R_given_A(s, r), closed::d2_limit_R_given_A(s),
                                    closed::e2(s, w, r), closed::q2_tripartite(s, r),
                                    closed::i2(s, w, r) - closed::j2_R_given_A(s, r)});
          closed_nonneg.deviation(std::max(0.0, -lowest), at(s, w, r));
        }
    emit(closed_nonneg);

    Check bounds(8, "0 <= J2, D2 <= I2", 1e-8);
    for (int i = 0; i < n; ++i) {
      const auto sigma = random_state(rng, 2, i % 2 == 0);
      const double i2 = mutual_information(sigma, pair_split()).value();
      for (Side side : {Side::A, Side::B}) {
        const double j2 = classical_correlations(sigma, pair_split(), side).value.value();
        const double d2 = i2 - j2;
        bounds.deviation(std::max({0.0, -j2, j2 - i2, -d2, d2 - i2}),
                         "instance " + std::to_string(i));
      }
    }
    emit(bounds);

    Check dominance(8, "thermal seeds never beat pure ones", 0.0);
    const double occupancy[] = {0.0, 0.25, 0.5, 1.0, 2.0};
    for (int i = 0; i < n; ++i) {
      const auto sigma = random_state(rng, 2, i % 2 == 0);
      bool ok = true;
      for (int a = 0; a < 10 && ok; ++a)
        for (int b = 0; b < 10 && ok; ++b) {
          const double theta = std::numbers::pi * a / 10;
          const double z = -3.0 + 6.0 * b / 9;
          double previous = std::numeric_limits<double>::infinity();
          for (double nbar : occupancy) {
            const double g = measurement_gain(sigma, pair_split(), MeasurementSeed(theta, z, nbar));
            if (g > previous + 1e-12 * std::max(1.0, std::abs(previous))) ok = false;
            previous = g;
          }
        }
      dominance.count(ok, "instance " + std::to_string(i));
    }
    emit(dominance);
  }

  static FrameScenario random_scenario(std::mt19937_64& rng, double top = 2.5) {
    std::uniform_real_distribution<double> p(0.0, top);
    switch (rng() % 3) {
      case 0: return FrameScenario::inertial(p(rng));
      case 1: return FrameScenario::setting_a(p(rng), p(rng));
      default: {
        const double s = p(rng), w = p(rng), r = p(rng);
        return FrameScenario::setting_b(s, w, r);
      }
    }
  }

  void figures() {
    const auto fig2a = figure_table(Figure::fig2a);
    const auto fig2b = figure_table(Figure::fig2b);
    const auto fig3 = figure_table(Figure::fig3);
    const double s = unit_squeezing();

    Check start(9, "fig2a r=0: I2 = 2, others = 1", 1e-6);
    for (std::size_t j = 1; j < fig2a.columns.size(); ++j) {
      const double expect = fig2a.columns[j] == "I2" ? 2.0 : 1.0;
      start.deviation(std::abs(fig2a.rows.front()[j] - expect), fig2a.columns[j]);
    }
    emit(start);

    Check flat(9, "fig2a J2_A_given_R constant", 1e-6);
    const auto ja = fig2a.column("J2_A_given_R");
    for (const auto& row : fig2a.rows) flat.deviation(std::abs(row[ja] - 1.0), at(s, 0, row[0]));
    emit(flat);

    Check tail_d2(9, "fig2a D2_R_given_A at r=3 near its limit", 5e-3);
    const auto& last = fig2a.rows.back();
    tail_d2.deviation(std::abs(last[fig2a.column("D2_R_given_A")] - closed::d2_limit_R_given_A(s)),
                      at(s, 0, last[0]));
    emit(tail_d2);
    Check tail_i2(9, "fig2a I2 at r=3 near half its inertial value", 1e-2);
    tail_i2.deviation(std::abs(last[fig2a.column("I2")] - 1.0), at(s, 0, last[0]));
    emit(tail_i2);

    Check death(9, "fig2b E2 reaches 0 at finite r and stays there", 0.0);
    const auto e2 = fig2b.column("E2");
    std::size_t first_zero = fig2b.rows.size();
    for (std::size_t i = 0; i < fig2b.rows.size(); ++i)
      if (fig2b.rows[i][e2] <= 2e-4) {
        first_zero = i;
        break;
      }
    death.count(first_zero > 0 && first_zero < fig2b.rows.size(), "no zero crossing");
    for (std::size_t i = first_zero; i < fig2b.rows.size(); ++i)
      death.count(fig2b.rows[i][e2] <= 2e-4, at(s, 2 * fig2b.rows[i][0], fig2b.rows[i][0]));
    if (first_zero < fig2b.rows.size()) {
      const double r0 = fig2b.rows[first_zero][0];
      death.count(closed::sudden_death(s, 2 * r0, r0), at(s, 2 * r0, r0) + " boundary");
    }
    emit(death);

    Check q0(9, "fig3 Q2_trip at r=0", 1e-12);
    q0.deviation(std::abs(fig3.rows.front()[fig3.column("Q2_trip")]), at(s, 0, 0));
    emit(q0);
    Check rows(9, "fig3 residuals match Q2_trip", 1e-2);
    for (const auto& row : fig3.rows) {
      const double ent = row[fig3.column("E2_R_vs_ARbar")] - row[fig3.column("E2_R_A")] -
                         row[fig3.column("E2_R_Rbar")];
      const double dis = row[fig3.column("D2_R_given_ARbar")] - row[fig3.column("D2_R_given_A")] -
                         row[fig3.column("D2_R_given_Rbar")];
      const double q = row[fig3.column("Q2_trip")];
      rows.deviation(std::max(std::abs(ent - q), std::abs(dis - q)), at(s, 0, row[0]));
    }
    emit(rows);
  }

  Grid grid_;
  ValidationHooks hooks_;
  std::vector<CheckResult> out_;
};

}  // namespace

ValidationGrid parse_grid(const std::string& text) {
  if (text == "coarse") return ValidationGrid::coarse;
  if (text == "fine") return ValidationGrid::fine;
  throw InvalidArgument("grid must be 'coarse' or 'fine'");
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool ValidationReport::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

std::vector<const CheckResult*> ValidationReport::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(&c);
  return out;
}

std::vector<CheckResult> run_criterion(int criterion, ValidationGrid grid,
                                       const ValidationHooks& hooks) {
  Runner runner(grid, hooks);
  return runner.run(criterion);
}

ValidationReport run_validation(ValidationGrid grid, const ValidationHooks& hooks) {
  Runner runner(grid, hooks);
  ValidationReport rep;
  for (int c = 1; c <= kCriterionCount; ++c) {
    auto part = runner.run(c);
    rep.checks.insert(rep.checks.end(), part.begin(), part.end());
  }
  return rep;
}

std::string format_check(const CheckResult& c) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "[%s] %d %s delta=%.3e tol=%.1e at %s", c.passed ? "PASS" : "FAIL",
                c.criterion, c.name.c_str(), c.delta, c.tolerance, c.where.c_str());
  return buf;
}

}  // namespace gaussia
