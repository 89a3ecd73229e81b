#include <gtest/gtest.h>

#include <numbers>

#include "gaussia/closed_forms.hpp"
#include "gaussia/error.hpp"
#include "gaussia/measurement.hpp"
#include "gaussia/unruh.hpp"
#include "support.hpp"

using namespace gaussia;
using gaussia::testing::kS;
using gaussia::testing::pair;

namespace {

CovarianceMatrix squeezed(double s) { return CovarianceMatrix(gaussia::testing::two_mode_squeezed(s)); }

double min_eig(const Matrix& m) { return Eigen::SelfAdjointEigenSolver<Matrix>(m).eigenvalues().minCoeff(); }

}  // namespace

TEST(Seed, Validation) {
  EXPECT_THROW(MeasurementSeed(0.0, 21.0), InvalidArgument);
  EXPECT_THROW(MeasurementSeed(0.0, 0.0, -0.1), InvalidArgument);
  EXPECT_THROW(MeasurementSeed(std::nan(""), 0.0), InvalidArgument);
  const MeasurementSeed wrapped(std::numbers::pi + 0.25, 0.5);
  EXPECT_NEAR(wrapped.theta(), 0.25, 1e-14);
  const MeasurementSeed noisy(0.3, 0.4, 1.0);
  EXPECT_NEAR(noisy.cm().determinant(), 9.0, 1e-12);
  EXPECT_NEAR(MeasurementSeed(1.1, -2.0).cm().determinant(), 1.0, 1e-12);
}

TEST(ConditionalCm, ProductStateUnchanged) {
  const auto a = thermal_cm(1.3);
  const auto sigma = direct_sum(a, thermal_cm(0.4));
  const auto cond = conditional_cm(sigma, pair(), MeasurementSeed(0.7, 1.2));
  EXPECT_LT((cond.entries() - a.entries()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ConditionalCm, HeterodyneOnSqueezedPairGivesVacuum) {
  const auto cond = conditional_cm(squeezed(kS), pair(), MeasurementSeed::heterodyne());
  EXPECT_LT((cond.entries() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ConditionalCm, NeverExceedsMarginal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi), z(-4.0, 4.0), n(0.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const auto sigma = gaussia::testing::random_state(rng, 2);
    const MeasurementSeed seed(th(rng), z(rng), n(rng));
    const auto cond = conditional_cm(sigma, pair(), seed);
    EXPECT_TRUE(is_bona_fide(cond));
    const Matrix gap = sigma.entries().topLeftCorner(2, 2) - cond.entries();
    EXPECT_GE(min_eig(gap), -1e-12 * sigma.entries().cwiseAbs().maxCoeff());
  }
}

TEST(ConditionalCm, MultiModeMeasuredSideUnsupported) {
  EXPECT_THROW(conditional_cm(setting_a(0.5, 0.5), ModePartition::bipartite({0}, {1, 2}),
                              MeasurementSeed::heterodyne()),
               Unsupported);
}

TEST(HomodyneLimit, MatchesLargeSqueezing) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi);
  for (int i = 0; i < 30; ++i) {
    const auto sigma = gaussia::testing::random_state(rng, 2);
    const double theta = th(rng);
    const double gain_p = measurement_gain(sigma, pair(), MeasurementSeed(theta, 20.0));
    const double gain_q = measurement_gain(sigma, pair(), MeasurementSeed(theta, -20.0));
    const auto lim_p = homodyne_conditional_cm(sigma, pair(), theta, true);
    const auto lim_q = homodyne_conditional_cm(sigma, pair(), theta, false);
    const std::size_t a[] = {0};
    const double det_a = partial_trace(sigma, a).determinant();
    EXPECT_NEAR(gain_p, 0.5 * std::log(det_a / lim_p.determinant()), 1e-8);
    EXPECT_NEAR(gain_q, 0.5 * std::log(det_a / lim_q.determinant()), 1e-8);
  }
}

TEST(ClassicalCorrelations, SqueezedPairBothSides) {
  for (double s : {0.2, kS, 1.4}) {
    for (Side side : {Side::A, Side::B}) {
      const auto j = classical_correlations(squeezed(s), pair(), side);
      EXPECT_NEAR(j.value.value(), std::log(std::cosh(2 * s)), 1e-6);
      const auto d = discord(squeezed(s), pair(), side);
      EXPECT_NEAR(d.value.value(), std::log(std::cosh(2 * s)), 1e-6);
    }
  }
}

TEST(ClassicalCorrelations, RobMeasuringIsIndependentOfR) {
  for (double r : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    const auto j = classical_correlations(observed_pair(FrameScenario::setting_a(kS, r)), pair(),
                                          Side::B);
    EXPECT_NEAR(j.value.value(), std::log(std::cosh(2 * kS)), 1e-6) << r;
  }
}

TEST(ClassicalCorrelations, AliceMeasuringExample) {
  const auto j =
      classical_correlations(observed_pair(FrameScenario::setting_a(kS, 1.0)), pair(), Side::A);
  EXPECT_NEAR(j.value.value(), 0.7361, 5e-4);
  EXPECT_NEAR(j.value.value(), closed::j2_R_given_A(kS, 1.0), 1e-6);
}

TEST(ClassicalCorrelations, AliceMeasuringIgnoresW) {
  for (double r : {0.5, 1.5})
    for (double w : {0.0, 0.7, 2.0}) {
      const auto j = classical_correlations(observed_pair(FrameScenario::setting_b(kS, w, r)),
                                            pair(), Side::A);
      EXPECT_NEAR(j.value.value(), closed::j2_R_given_A(kS, r), 1e-6) << w << " " << r;
    }
}

TEST(Discord, LargeRLimit) {
  const auto d = discord(observed_pair(FrameScenario::setting_a(kS, 10.0)), pair(), Side::A);
  EXPECT_NEAR(d.value.value(), 0.37989, 1e-3);
  EXPECT_NEAR(d.value.value(), std::log(2 * std::numbers::e / (std::numbers::e + 1)), 1e-3);
}

TEST(Discord, ProductStateIsZero) {
  const auto sigma = direct_sum(thermal_cm(0.5), thermal_cm(2.0));
  EXPECT_EQ(discord(sigma, pair(), Side::A).value.value(), 0.0);
  EXPECT_EQ(discord(sigma, pair(), Side::B).value.value(), 0.0);
}

TEST(Discord, BoundedByMutualInformation) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const auto sigma = gaussia::testing::random_state(rng, 2);
    const double i2 = mutual_information(sigma, pair()).value();
    for (Side side : {Side::A, Side::B}) {
      const double j2 = classical_correlations(sigma, pair(), side).value.value();
      const double d2 = discord(sigma, pair(), side).value.value();
      EXPECT_GE(j2, -1e-8);
      EXPECT_LE(j2, i2 + 1e-8);
      EXPECT_GE(d2, -1e-8);
      EXPECT_LE(d2, i2 + 1e-8);
      EXPECT_NEAR(j2 + d2, i2, 1e-9);
    }
  }
}

TEST(SeedDominance, ThermalNoiseNeverHelps) {
  std::mt19937_64 rng(21);
  for (int inst = 0; inst < 5; ++inst) {
    const auto sigma = gaussia::testing::random_state(rng, 2);
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < 10; ++k) {
        const double theta = std::numbers::pi * i / 10, z = -3.0 + 6.0 * k / 9;
        double prev = measurement_gain(sigma, pair(), MeasurementSeed(theta, z, 0.0));
        for (int m = 1; m < 5; ++m) {
          const double g = measurement_gain(sigma, pair(), MeasurementSeed(theta, z, 0.5 * m));
          EXPECT_LE(g, prev + 1e-12);
          prev = g;
        }
      }
  }
}

TEST(ClassicalCorrelations, DirectionsMayDiffer) {
  const auto sigma = observed_pair(FrameScenario::setting_a(kS, 1.0));
  const double by_b = classical_correlations(sigma, pair(), Side::B).value.value();
  const double by_a = classical_correlations(sigma, pair(), Side::A).value.value();
  EXPECT_GT(std::abs(by_b - by_a), 0.1);
}

TEST(ClassicalCorrelations, ThreeModeStateUnsupported) {
  EXPECT_THROW(classical_correlations(setting_a(0.5, 0.5), ModePartition::bipartite({0, 2}, {1}),
                                      Side::B),
               Unsupported);
}

TEST(ClassicalCorrelations, NotConvergedCarriesBestValue) {
  MeasurementSearch tight;
  tight.max_rounds = 1;
  tight.relative_tolerance = 1e-300;
  try {
    classical_correlations(observed_pair(FrameScenario::setting_b(0.7, 0.3, 0.9)), pair(),
                           Side::B, tight);
    FAIL() << "expected NotConverged";
  } catch (const NotConverged& e) {
    EXPECT_GT(e.best_value(), 0.0);
  }
}
