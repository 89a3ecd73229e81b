#include <gtest/gtest.h>

#include <cstdlib>

#include "gaussia/analysis.hpp"
#include "gaussia/closed_forms.hpp"
#include "gaussia/error.hpp"
#include "gaussia/serialization.hpp"
#include "support.hpp"

using namespace gaussia;
using gaussia::testing::kS;

TEST(Analyze, InertialUnitSqueezing) {
  const auto rep = analyze(FrameScenario::inertial(unit_squeezing()));
  EXPECT_NEAR(rep.i2, 2.0, 1e-9);
  for (double v : {rep.j2_A_given_R, rep.j2_R_given_A, rep.d2_A_given_R, rep.d2_R_given_A,
                   rep.e2_closed, rep.e2_estimate})
    EXPECT_NEAR(v, 1.0, 1e-6);
  EXPECT_FALSE(rep.tripartite.has_value());
}

TEST(Analyze, SettingAWithZeroRIsInertial) {
  const auto in = analyze(FrameScenario::inertial(kS));
  const auto a = analyze(FrameScenario::setting_a(kS, 0.0));
  EXPECT_NEAR(a.i2, in.i2, 1e-12);
  EXPECT_NEAR(a.j2_A_given_R, in.j2_A_given_R, 1e-9);
  EXPECT_NEAR(a.j2_R_given_A, in.j2_R_given_A, 1e-9);
  EXPECT_NEAR(a.e2_estimate, in.e2_estimate, 1e-9);
  EXPECT_DOUBLE_EQ(a.e2_closed, in.e2_closed);
}

TEST(Analyze, SettingAExample) {
  const auto rep = analyze(FrameScenario::setting_a(kS, 1.0));
  EXPECT_NEAR(rep.i2, closed::i2(kS, 0, 1.0), 1e-10);
  EXPECT_NEAR(rep.j2_R_given_A, closed::j2_R_given_A(kS, 1.0), 1e-6);
  EXPECT_NEAR(rep.j2_A_given_R, closed::j2_A_given_R(kS), 1e-6);
  EXPECT_NEAR(rep.e2_estimate, 0.39314, 1e-5);
  EXPECT_NEAR(rep.d2_R_given_A + rep.j2_R_given_A, rep.i2, 1e-9);
  ASSERT_TRUE(rep.tripartite.has_value());
  EXPECT_NEAR(rep.tripartite->residual_discord, 0.34282, 1e-5);
}

TEST(Analyze, SuddenDeathKeepsDiscord) {
  const auto rep = analyze(FrameScenario::setting_b(0.3, 2.0, 2.0));
  EXPECT_EQ(rep.e2_closed, 0.0);
  EXPECT_LE(rep.e2_estimate, 2e-4);
  EXPECT_GT(rep.d2_R_given_A, 1e-3);
  EXPECT_GT(rep.d2_A_given_R, 1e-3);
  EXPECT_FALSE(rep.tripartite.has_value());
}

TEST(Analyze, RejectsInvalidScenario) {
  EXPECT_THROW(analyze(FrameScenario::setting_a(-1.0, 0.0)), InvalidArgument);
}

TEST(Sweep, Validation) {
  SweepSpec spec;
  spec.scenario = FrameScenario::setting_a(kS, 0.0);
  spec.parameter = SweepParameter::r;
  spec.start = 0.0;
  spec.stop = 1.0;
  spec.steps = 5;
  EXPECT_NO_THROW(spec.validate());
  auto bad = spec;
  bad.steps = 1;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = spec;
  bad.start = 2.0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = spec;
  bad.parameter = SweepParameter::w;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = spec;
  bad.scenario = FrameScenario::inertial(kS);
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(Sweep, PointsAreEvenlySpacedAndEndExactly) {
  SweepSpec spec;
  spec.scenario = FrameScenario::setting_b(0.5, 0.0, 1.0);
  spec.parameter = SweepParameter::w;
  spec.start = 0.0;
  spec.stop = 0.3;
  spec.steps = 4;
  const auto pts = spec.points();
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts.front().w, 0.0);
  EXPECT_EQ(pts.back().w, 0.3);
  EXPECT_NEAR(pts[1].w, 0.1, 1e-15);
  for (const auto& p : pts) {
    EXPECT_EQ(p.s, 0.5);
    EXPECT_EQ(p.r, 1.0);
  }
}

TEST(Sweep, RunPreservesOrder) {
  SweepSpec spec;
  spec.scenario = FrameScenario::setting_a(kS, 0.0);
  spec.start = 0.0;
  spec.stop = 2.0;
  spec.steps = 6;
  const auto reps = run_sweep(spec);
  const auto pts = spec.points();
  ASSERT_EQ(reps.size(), pts.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_EQ(reps[i].scenario, pts[i]);
    EXPECT_NEAR(reps[i].i2, closed::i2(kS, 0, pts[i].r), 1e-10);
  }
  const auto table = sweep_table(reps);
  EXPECT_EQ(table.columns.size(), 10u);
  EXPECT_EQ(table.rows.size(), 6u);
  EXPECT_EQ(table.rows[3][table.column("r")], pts[3].r);
}

TEST(Sweep, SingleThreadMatchesParallel) {
  SweepSpec spec;
  spec.scenario = FrameScenario::setting_b(kS, 0.5, 0.0);
  spec.start = 0.0;
  spec.stop = 1.5;
  spec.steps = 4;
  const std::string parallel = to_csv(sweep_table(run_sweep(spec)));
  ::setenv("GAUSSIA_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  const std::string serial = to_csv(sweep_table(run_sweep(spec)));
  ::unsetenv("GAUSSIA_THREADS");
  EXPECT_EQ(parallel, serial);
}

TEST(Csv, Format) {
  Table t;
  t.columns = {"a", "b"};
  t.rows = {{0.0, 1.0 / 3.0}, {2.0, -1e-20}};
  EXPECT_EQ(to_csv(t), "a,b\n0,0.333333333333\n2,-1e-20\n");
  EXPECT_THROW(t.column("c"), InvalidArgument);
  EXPECT_EQ(t.column("b"), 1u);
}

TEST(Figure, Names) {
  EXPECT_EQ(parse_figure("fig2b"), Figure::fig2b);
  EXPECT_EQ(to_string(Figure::fig3), "fig3");
  EXPECT_THROW(parse_figure("fig4"), InvalidArgument);
  EXPECT_THROW(figure_table(Figure::fig2a, 1), InvalidArgument);
}

TEST(Figure, Fig2aSpotChecks) {
  const auto t = figure_table(Figure::fig2a, 13);
  ASSERT_EQ(t.rows.size(), 13u);
  const auto& first = t.rows.front();
  EXPECT_EQ(first[t.column("r")], 0.0);
  EXPECT_NEAR(first[t.column("I2")], 2.0, 1e-9);
  for (const char* c : {"J2_A_given_R", "J2_R_given_A", "D2_A_given_R", "D2_R_given_A", "E2"})
    EXPECT_NEAR(first[t.column(c)], 1.0, 1e-6) << c;
  const auto& last = t.rows.back();
  EXPECT_EQ(last[t.column("r")], 3.0);
  const double s = unit_squeezing();
  EXPECT_NEAR(last[t.column("I2")], closed::i2(s, 0, 3.0), 1e-10);
  EXPECT_NEAR(last[t.column("J2_A_given_R")], 1.0, 1e-6);
  EXPECT_NEAR(last[t.column("D2_R_given_A")], closed::i2(s, 0, 3) - closed::j2_R_given_A(s, 3),
              1e-6);
}

TEST(Figure, Fig2bUsesTwiceR) {
  const auto t = figure_table(Figure::fig2b, 5);
  const double s = unit_squeezing();
  for (const auto& row : t.rows) {
    const double r = row[t.column("r")];
    EXPECT_NEAR(row[t.column("I2")], closed::i2(s, 2 * r, r), 1e-10);
    EXPECT_NEAR(row[t.column("E2")], closed::e2(s, 2 * r, r), 5e-3);
  }
}

TEST(Figure, Fig3Columns) {
  const auto t = figure_table(Figure::fig3, 4);
  EXPECT_EQ(t.columns.front(), "r");
  EXPECT_EQ(t.columns[1], "Q2_trip");
  EXPECT_EQ(t.columns.size(), 8u);
  const double s = unit_squeezing();
  for (const auto& row : t.rows)
    EXPECT_NEAR(row[1], closed::q2_tripartite(s, row[0]), 1e-12);
}

TEST(Figure, ByteStable) {
  EXPECT_EQ(to_csv(figure_table(Figure::fig3, 5)), to_csv(figure_table(Figure::fig3, 5)));
}

TEST(Serialization, MatrixRoundTrip) {
  const auto sigma = setting_b(kS, 0.4, 0.9);
  const auto back = covariance_from_json(parse_json(to_json(sigma).dump()));
  EXPECT_EQ(back, sigma);
}

TEST(Serialization, ScenarioRoundTrip) {
  for (const auto& sc : {FrameScenario::inertial(0.2), FrameScenario::setting_a(0.3, 1.0),
                         FrameScenario::setting_b(0.4, 0.5, 0.6)})
    EXPECT_EQ(scenario_from_json(parse_json(to_json(sc).dump())), sc);
  EXPECT_EQ(scenario_from_json(parse_json(R"({"setting":"a","s":0.5})")),
            FrameScenario::setting_a(0.5, 0.0));
}

TEST(Serialization, Errors) {
  EXPECT_THROW(parse_json("{\"setting\":"), FormatError);
  EXPECT_THROW(scenario_from_json(parse_json("[1,2]")), FormatError);
  EXPECT_THROW(scenario_from_json(parse_json(R"({"setting":"a","s":"x"})")), FormatError);
  EXPECT_THROW(scenario_from_json(parse_json(R"({"setting":"a","s":-1})")), InvalidArgument);
  EXPECT_THROW(scenario_from_json(parse_json(R"({"setting":"z","s":1})")), InvalidArgument);
  EXPECT_THROW(covariance_from_json(parse_json(R"({"modes":1,"entries":[1,0,0]})")), FormatError);
  EXPECT_THROW(sweep_spec_from_json(parse_json(
                   R"({"scenario":{"setting":"a","s":1},"parameter":"r","start":0,"stop":1,"steps":2.5,"out":"x"})")),
               FormatError);
  EXPECT_THROW(sweep_spec_from_json(parse_json(
                   R"({"scenario":{"setting":"a","s":1},"parameter":"r","start":0,"stop":1,"steps":3})")),
               FormatError);
}

TEST(Serialization, SweepSpec) {
  const auto spec = sweep_spec_from_json(parse_json(
      R"({"scenario":{"setting":"b","s":0.8,"r":1},"parameter":"w","start":0,"stop":2,"steps":3,"out":"o.json","format":"json"})"));
  EXPECT_EQ(spec.parameter, SweepParameter::w);
  EXPECT_EQ(spec.format, SweepFormat::json);
  EXPECT_EQ(spec.out, "o.json");
  EXPECT_EQ(spec.steps, 3);
  EXPECT_EQ(sweep_spec_from_json(parse_json(
                R"({"scenario":{"setting":"a","s":1},"parameter":"r","start":0,"stop":1,"steps":2,"out":"x"})"))
                .format,
            SweepFormat::csv);
}

TEST(Serialization, ReportShape) {
  const auto j = to_json(analyze(FrameScenario::setting_b(kS, 0.3, 0.5)));
  for (const char* key : {"scenario", "I2", "J2", "D2", "E2", "seeds", "closed", "tripartite"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["tripartite"].is_null());
  EXPECT_TRUE(j["J2"].contains("A_given_R"));
}
