#include <gtest/gtest.h>

#include <numbers>

#include "gaussia/error.hpp"
#include "gaussia/renyi.hpp"
#include "gaussia/unruh.hpp"
#include "support.hpp"

using namespace gaussia;
using gaussia::testing::kS;
using gaussia::testing::pair;

TEST(AccelerationParameter, ColdLimit) {
  UnruhParameters p;
  p.mode_frequency = 1.0;
  p.temperature = 0.01;
  EXPECT_LT(acceleration_parameter(p, UnruhInput::temperature), 1e-15);
}

TEST(AccelerationParameter, HalfOccupancyPoint) {
  UnruhParameters p;
  p.mode_frequency = 2.0;
  p.temperature = 2.0 / std::numbers::ln2;
  const double r = acceleration_parameter(p, UnruhInput::temperature);
  EXPECT_NEAR(r, std::acosh(std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(r, 0.88137, 1e-5);
  EXPECT_NEAR(std::pow(std::cosh(r), -2), 1.0 - std::exp(-p.mode_frequency / p.temperature), 1e-14);
}

TEST(AccelerationParameter, FromAcceleration) {
  UnruhParameters p;
  p.mode_frequency = 1.0;
  p.proper_acceleration = 2 * std::numbers::pi;
  EXPECT_DOUBLE_EQ(unruh_temperature(p.proper_acceleration), 1.0);
  p.temperature = 1.0;
  EXPECT_DOUBLE_EQ(acceleration_parameter(p, UnruhInput::acceleration),
                   acceleration_parameter(p, UnruhInput::temperature));
}

TEST(AccelerationParameter, MonotoneInTemperature) {
  UnruhParameters p;
  p.mode_frequency = 1.0;
  double prev = -1.0;
  for (int k = 1; k <= 50; ++k) {
    p.temperature = 0.1 * k;
    const double r = acceleration_parameter(p, UnruhInput::temperature);
    EXPECT_GT(r, prev);
    prev = r;
  }
}

TEST(AccelerationParameter, RejectsNonpositive) {
  UnruhParameters p;
  p.mode_frequency = -1.0;
  p.temperature = 1.0;
  EXPECT_THROW(acceleration_parameter(p, UnruhInput::temperature), InvalidArgument);
  p.mode_frequency = 1.0;
  p.temperature = 0.0;
  EXPECT_THROW(acceleration_parameter(p, UnruhInput::temperature), InvalidArgument);
  EXPECT_THROW(acceleration_parameter(p, UnruhInput::acceleration), InvalidArgument);
  EXPECT_THROW(unruh_temperature(-1.0), InvalidArgument);
}

TEST(InertialPair, Examples) {
  EXPECT_EQ(inertial_pair(0.0), vacuum_cm(2));
  const auto sigma = inertial_pair(kS);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(sigma(i, i), std::numbers::e, 1e-5);
  EXPECT_NEAR(pure_state_entanglement(sigma, pair()).value(), std::log(std::cosh(2 * kS)), 1e-14);
  EXPECT_THROW(inertial_pair(-0.1), InvalidArgument);
}

TEST(SettingA, ZeroRDecouplesRbar) {
  const auto sigma = setting_a(kS, 0.0);
  EXPECT_EQ(sigma, direct_sum(inertial_pair(kS), vacuum_cm(1)));
}

TEST(SettingA, RobMarginal) {
  for (double s : {0.3, kS})
    for (double r : {0.4, 2.0}) {
      const std::size_t keep[] = {modes::R};
      const auto m = partial_trace(setting_a(s, r), keep);
      const double expect = std::pow(std::cosh(r), 2) * std::cosh(2 * s) + std::pow(std::sinh(r), 2);
      EXPECT_NEAR(m(0, 0), expect, 1e-12 * expect);
      EXPECT_NEAR(m(1, 1), expect, 1e-12 * expect);
      EXPECT_NEAR(m(0, 1), 0.0, 1e-12);
    }
}

TEST(SettingA, PureAndRejectsNegative) {
  EXPECT_NEAR(setting_a(0.83, 2.0).determinant(), 1.0, 1e-9);
  EXPECT_THROW(setting_a(0.5, -1.0), InvalidArgument);
}

TEST(SettingB, ZeroWReducesToSettingA) {
  const auto b = setting_b(kS, 0.0, 1.3);
  const std::size_t keep[] = {modes::A, modes::R, modes::Rbar_b};
  const auto reduced = partial_trace(b, keep);
  EXPECT_LT((reduced.entries() - setting_a(kS, 1.3).entries()).cwiseAbs().maxCoeff(), 1e-12);
  const std::size_t abar[] = {modes::Abar_b};
  EXPECT_EQ(partial_trace(b, abar), vacuum_cm(1));
}

TEST(SettingB, NoInertialSqueezingNoCorrelations) {
  EXPECT_EQ(mutual_information(observed_pair(FrameScenario::setting_b(0.0, 1.0, 1.0)), pair()).value(),
            0.0);
}

TEST(SettingB, Pure) {
  EXPECT_NEAR(setting_b(0.83, 1.66, 0.5).determinant(), 1.0, 1e-9);
  EXPECT_THROW(setting_b(0.5, -0.1, 1.0), InvalidArgument);
}

TEST(ObservedPair, Examples) {
  EXPECT_EQ(observed_pair(FrameScenario::inertial(kS)), inertial_pair(kS));
  EXPECT_NEAR(mutual_information(observed_pair(FrameScenario::setting_a(kS, 12.0)), pair()).value(),
              std::log(std::cosh(2 * kS)), 1e-8);
}

TEST(ObservedPair, SettingBWithZeroWMatchesSettingA) {
  for (double r : {0.0, 0.7, 2.5}) {
    const Matrix a = observed_pair(FrameScenario::setting_a(kS, r)).entries();
    const Matrix b = observed_pair(FrameScenario::setting_b(kS, 0.0, r)).entries();
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ObservedPair, MutualInformationDecreasesInR) {
  for (double s : {0.3, kS, 1.5}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 15; ++k) {
      const double i2 =
          mutual_information(observed_pair(FrameScenario::setting_a(s, 0.2 * k)), pair()).value();
      EXPECT_LT(i2, prev) << s << " " << 0.2 * k;
      prev = i2;
    }
  }
}

TEST(GlobalCm, PureOnGrid) {
  for (double s : {0.3, kS, 1.5})
    for (double r : {0.0, 0.5, 1.0, 2.0})
      for (double k : {0.0, 1.0, 2.0}) {
        const auto sc = FrameScenario::setting_b(s, k * r, r);
        EXPECT_TRUE(is_bona_fide(observed_pair(sc)));
        for (double nu : symplectic_eigenvalues(global_cm(sc))) EXPECT_NEAR(nu, 1.0, 1e-7);
      }
}

TEST(GlobalCm, PureAndBonaFideAtModerateParameters) {
  for (double s : {0.3, kS, 1.5})
    for (double r : {0.0, 0.5, 1.0})
      for (double k : {0.0, 1.0, 2.0}) {
        const auto g = global_cm(FrameScenario::setting_b(s, k * r, r));
        EXPECT_TRUE(is_bona_fide(g));
        EXPECT_NEAR(g.determinant(), 1.0, 1e-9);
      }
  for (double s : {0.3, kS, 1.5})
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
      const auto g = global_cm(FrameScenario::setting_a(s, r));
      EXPECT_TRUE(is_bona_fide(g));
      EXPECT_NEAR(g.determinant(), 1.0, 1e-9);
    }
}

TEST(Scenario, ParseAndValidate) {
  EXPECT_EQ(parse_setting("a"), Setting::a);
  EXPECT_EQ(parse_setting("inertial"), Setting::inertial);
  EXPECT_EQ(to_string(Setting::b), "b");
  EXPECT_THROW(parse_setting("c"), InvalidArgument);
  EXPECT_THROW(FrameScenario::setting_a(std::nan(""), 1.0).validate(), InvalidArgument);
  EXPECT_EQ(FrameScenario::setting_a(0.4, 1.0).alice(), 0.0);
  EXPECT_EQ(FrameScenario::inertial(0.4).rob(), 0.0);
}
