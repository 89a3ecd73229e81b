#include "gaussia/renyi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "gaussia/error.hpp"
#include "gaussia/log_real.hpp"
#include "gaussia/optimize.hpp"

namespace gaussia {

std::string_view to_string(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::entropy: return "entropy";
    case CorrelationKind::mutual_information: return "mutual_information";
    case CorrelationKind::classical: return "classical";
    case CorrelationKind::discord: return "discord";
    case CorrelationKind::entanglement: return "entanglement";
    case CorrelationKind::tripartite: return "tripartite";
  }
  return "unknown";
}

CorrelationValue::CorrelationValue(double value, CorrelationKind kind) : value_(value), kind_(kind) {
  if (std::isnan(value_)) throw Error(std::string(to_string(kind)) + " evaluated to NaN");
  if (value_ < -kZeroClamp) {
    throw Error(std::string(to_string(kind)) + " is negative (" + std::to_string(value_) + ")");
  }
  if (value_ < 0.0) value_ = 0.0;
}

CorrelationValue renyi2_entropy(const CovarianceMatrix& sigma) {
  if (!is_bona_fide(sigma)) throw NotBonaFide("renyi2_entropy: input is not a physical state");
  const double s2 = 0.5 * sigma.log_determinant();
  return {std::abs(s2) < kZeroClamp ? std::max(s2, 0.0) : s2, CorrelationKind::entropy};
}

double wigner_shannon_entropy(const CovarianceMatrix& sigma) {
  return renyi2_entropy(sigma).value() +
         static_cast<double>(sigma.modes()) * (1.0 + std::log(std::numbers::pi));
}

CorrelationValue mutual_information(const CovarianceMatrix& sigma, const ModePartition& partition) {
  if (partition.size() != 2 || !partition.covers(sigma.modes())) {
    throw InvalidArgument("mutual_information: partition must split every mode into two groups");
  }
  const auto blocks = split(sigma, partition);
  Eigen::LLT<Matrix> llt_a(blocks.a);
  Eigen::LLT<Matrix> llt_b(blocks.b);
  if (llt_a.info() != Eigen::Success || llt_b.info() != Eigen::Success) {
    throw NotBonaFide("mutual_information: marginal is not positive definite");
  }
  // Y = L_A^-1 C L_B^-T; its singular values are the canonical correlations.
  const Matrix y = llt_a.matrixL().solve(
      llt_b.matrixL().solve(blocks.c.transpose()).transpose());
  const Eigen::VectorXd mu = Eigen::JacobiSVD<Matrix>(y).singularValues();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    const double m2 = mu(k) * mu(k);
    if (!(m2 < 1.0)) throw NotBonaFide("mutual_information: global state is not positive definite");
    sum += std::log1p(-m2);
  }
  return {-0.5 * sum, CorrelationKind::mutual_information};
}

CorrelationValue pure_state_entanglement(const CovarianceMatrix& sigma,
                                         const ModePartition& partition) {
  if (partition.size() != 2 || !partition.covers(sigma.modes())) {
    throw InvalidArgument("pure_state_entanglement: partition must cover every mode");
  }
  if (!is_pure(sigma, 1e-6)) throw NotPure("pure_state_entanglement: state is mixed");
  const auto blocks = split(sigma, partition);
  const double s2 = 0.5 * CovarianceMatrix(blocks.a).log_determinant();
  return {s2, CorrelationKind::entanglement};
}

namespace {

// x = (theta1_A, z_A, theta2_A, theta1_B, z_B, theta2_B, t)
constexpr int kParams = 7;

Matrix2 euler(double theta1, double z, double theta2) {
  Matrix2 d = Matrix2::Zero();
  d(0, 0) = std::exp(z);
  d(1, 1) = std::exp(-z);
  return rotation(theta1) * d * rotation(theta2);
}

Eigen::Matrix4d pure_candidate(const Eigen::VectorXd& x) {
  const Matrix2 la = euler(x(0), x(1), x(2));
  const Matrix2 lb = euler(x(3), x(4), x(5));
  const double c = std::cosh(2.0 * x(6));
  const double s = std::sinh(2.0 * x(6));
  Matrix2 zed = Matrix2::Zero();
  zed(0, 0) = 1.0;
  zed(1, 1) = -1.0;
  Eigen::Matrix4d g;
  g.topLeftCorner<2, 2>() = c * la * la.transpose();
  g.bottomRightCorner<2, 2>() = c * lb * lb.transpose();
  g.topRightCorner<2, 2>() = s * la * zed * lb.transpose();
  g.bottomLeftCorner<2, 2>() = g.topRightCorner<2, 2>().transpose();
  return g;
}

struct RoofProblem {
  Eigen::Matrix4d sigma;
  double scale;

  double violation(const Eigen::VectorXd& x) const {
    const Eigen::Matrix4d diff = sigma - pure_candidate(x);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(diff, Eigen::EigenvaluesOnly);
    return std::max(0.0, -es.eigenvalues()(0)) / scale;
  }
  static double objective(const Eigen::VectorXd& x) { return log_cosh(2.0 * x(6)); }
  double penalized(const Eigen::VectorXd& x, double weight) const {
    const double v = violation(x);
    return objective(x) + weight * v * v;
  }
};

// Pure states S (g1 (+) g2) S^T with S the Williamson transform of sigma and
// g_k <= nu_k I are always feasible. When nu_1 = 1 they are the whole
// feasible set, with g_1 = I.
struct NormalModeFamily {
  Eigen::Matrix4d s;
  double z_max[2];

  static Matrix2 mode(double theta, double z) {
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = std::exp(2.0 * z);
    d(1, 1) = std::exp(-2.0 * z);
    const Matrix2 r = rotation(theta);
    return r * d * r.transpose();
  }
  // y = (theta_1, u_1, theta_2, u_2), z_k = z_max_k sin u_k
  Eigen::Matrix4d gamma(const Eigen::VectorXd& y) const {
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g.topLeftCorner<2, 2>() = mode(y(0), z_max[0] * std::sin(y(1)));
    g.bottomRightCorner<2, 2>() = mode(y(2), z_max[1] * std::sin(y(3)));
    return s * g * s.transpose();
  }
  double objective(const Eigen::VectorXd& y) const {
    const Eigen::Matrix4d g = gamma(y);
    return 0.5 * std::log(g.topLeftCorner<2, 2>().determinant());
  }
};

// Local symplectic L with L sigma L^T = [[a I, diag(c+, c-)], [., b I]].
Eigen::Matrix4d standard_form_transform(const Eigen::Matrix4d& sigma) {
  auto normalize = [](const Matrix2& block) {
    // Williamson form of one mode: diagonalize, then squeeze to a multiple of I.
    Eigen::SelfAdjointEigenSolver<Matrix2> es(block);
    Matrix2 o = es.eigenvectors();
    if (o.determinant() < 0.0) o.col(1) *= -1.0;
    const Eigen::Vector2d ev = es.eigenvalues();
    const double k = std::pow(ev(1) / ev(0), 0.25);
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = k;
    d(1, 1) = 1.0 / k;
    return Matrix2(d * o.transpose());
  };
  const Matrix2 la = normalize(sigma.topLeftCorner<2, 2>());
  const Matrix2 lb = normalize(sigma.bottomRightCorner<2, 2>());
  const Matrix2 c = la * sigma.topRightCorner<2, 2>() * lb.transpose();
  Eigen::JacobiSVD<Matrix2> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix2 u = svd.matrixU();
  Matrix2 v = svd.matrixV();
  if (u.determinant() < 0.0) u.col(1) *= -1.0;
  if (v.determinant() < 0.0) v.col(1) *= -1.0;
  Eigen::Matrix4d l = Eigen::Matrix4d::Zero();
  l.topLeftCorner<2, 2>() = u.transpose() * la;
  l.bottomRightCorner<2, 2>() = v.transpose() * lb;
  return l;
}

// Rotation-free pure states in the standard form. There sigma - gamma splits
// into a q block and a p block, so feasibility is an explicit 2x2 test.
struct AlignedProblem {
  double a, b, cp, cm;

  static double block_margin(double d1, double d2, double off) {
    return std::min({d1, d2, d1 * d2 - off * off});
  }
  double margin(double za, double zb, double t) const {
    const double c = std::cosh(2.0 * t), s = std::sinh(2.0 * t);
    const double x = std::exp(2.0 * za), y = std::exp(2.0 * zb);
    return std::min(block_margin(a - x * c, b - y * c, cp - std::exp(za + zb) * s),
                    block_margin(a - c / x, b - c / y, cm + std::exp(-za - zb) * s));
  }

  struct Root {
    double t;       // signed; NaN when no t is feasible
    double margin;  // best margin seen when infeasible
  };
  // Feasible t of least magnitude at squeezings (za, zb).
  Root least_t(double za, double zb) const {
    constexpr int kScan = 48;
    const double x = std::exp(2.0 * za), y = std::exp(2.0 * zb);
    const double cap = std::min({a / x, b / y, a * x, b * y});
    if (cap < 1.0) return {std::numeric_limits<double>::quiet_NaN(), cap - 1.0};
    const double t_cap = 0.5 * std::acosh(cap);
    Root out{std::numeric_limits<double>::quiet_NaN(), -std::numeric_limits<double>::infinity()};
    for (double sign : {1.0, -1.0}) {
      double prev = 0.0;
      for (int k = 0; k <= kScan; ++k) {
        const double t = t_cap * k / kScan;
        if (!std::isnan(out.t) && t >= std::abs(out.t)) break;
        const double m = margin(za, zb, sign * t);
        if (m < 0.0) {
          out.margin = std::max(out.margin, m);
          prev = t;
          continue;
        }
        double lo = prev, hi = t;
        if (k > 0) {
          for (int it = 0; it < 60 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (margin(za, zb, sign * mid) >= 0.0 ? hi : lo) = mid;
          }
        }
        out.t = sign * hi;
        break;
      }
    }
    return out;
  }

  double objective(const Eigen::VectorXd& z) const {
    const Root r = least_t(z(0), z(1));
    return std::isnan(r.t) ? 1e3 - r.margin : std::abs(r.t);
  }
};

struct Candidate {
  Eigen::VectorXd x;
  double value;
};

}  // namespace

EntanglementEstimate entanglement_estimate(const CovarianceMatrix& sigma,
                                           const ModePartition& partition,
                                           const EntanglementOptions& options) {
  if (partition.size() != 2 || !partition.covers(sigma.modes())) {
    throw InvalidArgument("entanglement_estimate: partition must cover every mode");
  }
  if (partition[0].modes.size() != 1 || partition[1].modes.size() != 1) {
    throw Unsupported("entanglement_estimate: only one mode per side is supported");
  }
  if (options.budget <= 0 || options.starts <= 0) {
    throw InvalidArgument("entanglement_estimate: budget and starts must be positive");
  }
  if (!is_bona_fide(sigma)) throw NotBonaFide("entanglement_estimate: input is not physical");

  const CovarianceMatrix ordered = partial_trace(sigma, partition);
  if (is_pure(ordered, kBonaFideTolerance)) {
    const auto e = pure_state_entanglement(ordered, ModePartition::bipartite({0}, {1}));
    return {CorrelationValue(e.value(), CorrelationKind::entanglement), 0.0, 0, ordered};
  }

  // E2 is invariant under local symplectics, so search in the standard form
  // and map the witness back.
  const Eigen::Matrix4d to_standard = standard_form_transform(ordered.entries());
  Eigen::Matrix4d standard = to_standard * ordered.entries() * to_standard.transpose();
  standard = 0.5 * (standard + standard.transpose()).eval();
  RoofProblem problem{standard, std::max(1.0, standard.cwiseAbs().maxCoeff())};
  int evaluations = 0;

  bool found = false;
  Candidate best{Eigen::VectorXd(), std::numeric_limits<double>::infinity()};
  Eigen::Matrix4d best_gamma = Eigen::Matrix4d::Zero();
  double least_violation = std::numeric_limits<double>::infinity();
  auto offer = [&](const Eigen::Matrix4d& gamma, double value) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(problem.sigma - gamma,
                                                      Eigen::EigenvaluesOnly);
    const double v = std::max(0.0, -es.eigenvalues()(0)) / problem.scale;
    least_violation = std::min(least_violation, v);
    if (v <= options.feasibility_tolerance && value < best.value) {
      best.value = value;
      best_gamma = gamma;
      found = true;
    }
  };

  const WilliamsonForm normal = williamson(CovarianceMatrix(Matrix(standard)));
  // With a vacuum normal mode the feasible set has empty interior and a
  // penalty search trades a violation v for an O(sqrt v) gain, so only the
  // exact normal-mode family is used.
  const bool boundary = normal.nu[0] - 1.0 <= kBonaFideTolerance;
  constexpr int kFamilyStarts = 8;
  constexpr int kFamilyMinimum = kFamilyStarts * 8;
  const int family_budget =
      boundary ? options.budget : std::min(options.budget / 10, kFamilyStarts * 250);
  if (family_budget >= kFamilyMinimum) {
    NormalModeFamily family{normal.transform.entries(),
                            {0.5 * std::log(std::max(1.0, normal.nu[0])),
                             0.5 * std::log(std::max(1.0, normal.nu[1]))}};
    if (boundary) family.z_max[0] = 0.0;
    for (int k = 0; k < kFamilyStarts; ++k) {
      Eigen::VectorXd y(4);
      y << (k & 1) * std::numbers::pi / 2, ((k >> 1) & 1 ? 0.5 : -0.5),
          ((k >> 2) & 1) * std::numbers::pi / 2, 0.0;
      optimize::NelderMeadOptions nm;
      nm.max_evaluations = family_budget / kFamilyStarts;
      nm.initial_step = 0.5;
      const auto res = optimize::nelder_mead(
          [&](const Eigen::VectorXd& p) { return family.objective(p); }, y, nm);
      evaluations += res.evaluations;
      offer(family.gamma(res.x), std::max(0.0, res.value));
    }
  }

  if (!boundary) {
    // gamma_A <= sigma_A forces cosh(2t) <= sqrt(det sigma_A), likewise for B.
    const double det_bound = std::min(standard.topLeftCorner<2, 2>().determinant(),
                                      standard.bottomRightCorner<2, 2>().determinant());
    const double t_max = 0.5 * std::acosh(std::max(1.0, std::sqrt(det_bound)));

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> squeeze(-1.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    constexpr double kInitialWeight = 1e3;
    constexpr int kRounds = 11;
    constexpr std::size_t kRefined = 4;
    constexpr int kAlignedStarts = 8;

    const int penalty_budget = options.budget - evaluations;

    // Weight continuation from x; returns the final point.
    auto continuation = [&](Eigen::VectorXd x, auto&& lift, int per_round, double step) {
      double weight = kInitialWeight;
      for (int round = 0; round < kRounds; ++round) {
        optimize::NelderMeadOptions nm;
        nm.max_evaluations = per_round;
        nm.initial_step = step;
        auto res = optimize::nelder_mead(
            [&](const Eigen::VectorXd& p) { return problem.penalized(lift(p), weight); }, x, nm);
        evaluations += res.evaluations;
        x = res.x;
        weight *= 10.0;
        step = std::max(1e-4, step * 0.5);
      }
      return x;
    };

    std::vector<Candidate> explored;
    explored.reserve(options.starts + kAlignedStarts);

    AlignedProblem aligned{standard(0, 0), standard(2, 2), standard(0, 2), standard(1, 3)};
    {
      constexpr int kGrid = 9;
      const double za_max = 0.25 * std::log(aligned.a), zb_max = 0.25 * std::log(aligned.b);
      std::vector<Candidate> grid;
      for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j) {
          Eigen::VectorXd z(2);
          z << za_max * (2.0 * i / (kGrid - 1) - 1.0), zb_max * (2.0 * j / (kGrid - 1) - 1.0);
          grid.push_back({z, aligned.objective(z)});
        }
      evaluations += kGrid * kGrid;
      std::stable_sort(grid.begin(), grid.end(),
                       [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
      const int per_start = std::max(16, (penalty_budget * 3 / 10) / kAlignedStarts);
      for (int k = 0; k < kAlignedStarts && k < static_cast<int>(grid.size()); ++k) {
        optimize::NelderMeadOptions nm;
        nm.max_evaluations = per_start;
        nm.initial_step = 0.25 * std::max(za_max, zb_max) / (kGrid - 1) + 1e-3;
        nm.f_tolerance = 1e-16;
        nm.x_tolerance = 1e-12;
        const auto res = optimize::nelder_mead(
            [&](const Eigen::VectorXd& z) { return aligned.objective(z); }, grid[k].x, nm);
        evaluations += res.evaluations;
        const auto root = aligned.least_t(res.x(0), res.x(1));
        if (std::isnan(root.t)) continue;
        Eigen::VectorXd x = Eigen::VectorXd::Zero(kParams);
        x(1) = res.x(0);
        x(4) = res.x(1);
        x(6) = root.t;
        offer(pure_candidate(x), RoofProblem::objective(x));
        explored.push_back({x, problem.penalized(x, kInitialWeight)});
      }
    }

    const int explore_budget =
        std::max(kParams + 2, (penalty_budget * 3 / 10) / options.starts);
    for (int k = 0; k < options.starts; ++k) {
      Eigen::VectorXd x(kParams);
      x << angle(rng), squeeze(rng), angle(rng), angle(rng), squeeze(rng), angle(rng),
          t_max * unit(rng);
      optimize::NelderMeadOptions nm;
      nm.max_evaluations = explore_budget;
      nm.initial_step = 0.3;
      auto res = optimize::nelder_mead(
          [&](const Eigen::VectorXd& p) { return problem.penalized(p, kInitialWeight); }, x, nm);
      evaluations += res.evaluations;
      explored.push_back({res.x, res.value});
    }
    // Stable sort keeps the lowest start index first among ties.
    std::stable_sort(explored.begin(), explored.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    explored.resize(std::min(kRefined, explored.size()));

    const int remaining = std::max(0, options.budget - evaluations);
    const int round_budget =
        std::max(kParams + 2, remaining / static_cast<int>(explored.size() * kRounds));
    auto identity = [](const Eigen::VectorXd& x) { return x; };
    for (auto& cand : explored) {
      cand.x = continuation(cand.x, identity, round_budget, 0.1);
      offer(pure_candidate(cand.x), RoofProblem::objective(cand.x));
    }
  }

  if (!found) {
    throw Infeasible("entanglement_estimate: no feasible pure decomposition within budget",
                     least_violation * problem.scale);
  }
  const Eigen::Matrix4d back = to_standard.inverse();
  Eigen::Matrix4d witness = back * best_gamma * back.transpose();
  witness = 0.5 * (witness + witness.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(ordered.entries() - witness,
                                                    Eigen::EigenvaluesOnly);
  const double residual = std::max(0.0, -es.eigenvalues()(0));
  return {CorrelationValue(best.value, CorrelationKind::entanglement), residual, evaluations,
          CovarianceMatrix(Matrix(witness))};
}

}  // namespace gaussia
