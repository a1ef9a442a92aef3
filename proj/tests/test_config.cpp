#include <doctest.h>

#include "qec/config.hpp"

TEST_CASE("flat config parsing") {
  auto kv = qec::parse_flat_config(
      "# comment line\n"
      "code = bitflip3\n"
      "trials=500   # trailing comment\n"
      "\n"
      "out = runs/sweep.csv\n");
  CHECK(kv.at("code") == "bitflip3");
  CHECK(kv.at("trials") == "500");
  CHECK(kv.at("out") == "runs/sweep.csv");
  CHECK_THROWS(qec::parse_flat_config("just words\n"));
}

TEST_CASE("experiment config defaults and validation") {
  qec::ExperimentConfig cfg = qec::ExperimentConfig::from_text(
      "code = bitflip3\n"
      "kind = bit_flip\n"
      "epsilon_start = 0.01\n"
      "epsilon_stop = 0.5\n"
      "epsilon_points = 5\n"
      "trials = 1000\n"
      "seed = 9\n");
  cfg.validate();
  CHECK(cfg.workers == 1);
  CHECK(cfg.format == "csv");
  CHECK(cfg.seed_set);
  auto grid = cfg.epsilon_grid();
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == doctest::Approx(0.01));
  CHECK(grid.back() == doctest::Approx(0.5));

  qec::ExperimentConfig bad = cfg;
  bad.eps_points = 0;
  CHECK_THROWS(bad.validate());
  bad = cfg;
  bad.eps_stop = 1.5;
  CHECK_THROWS(bad.validate());
  bad = cfg;
  bad.trials = 0;
  CHECK_THROWS(bad.validate());
  bad = cfg;
  bad.format = "xml";
  CHECK_THROWS(bad.validate());
}

TEST_CASE("log grid") {
  qec::ExperimentConfig cfg = qec::ExperimentConfig::from_text(
      "code = steane7\n"
      "kind = depolarizing_1q\n"
      "epsilon_start = 0.001\n"
      "epsilon_stop = 0.1\n"
      "epsilon_points = 3\n"
      "epsilon_scale = log\n"
      "trials = 10\n"
      "seed = 1\n");
  cfg.validate();
  auto grid = cfg.epsilon_grid();
  REQUIRE(grid.size() == 3);
  CHECK(grid[0] == doctest::Approx(0.001));
  CHECK(grid[1] == doctest::Approx(0.01));
  CHECK(grid[2] == doctest::Approx(0.1));
}

TEST_CASE("single point grid and channel kinds") {
  qec::ExperimentConfig cfg = qec::ExperimentConfig::from_text(
      "code = bitflip3\n"
      "kind = phase_flip\n"
      "epsilon_start = 0.25\n"
      "trials = 10\n"
      "seed = 2\n");
  cfg.validate();
  auto grid = cfg.epsilon_grid();
  REQUIRE(grid.size() == 1);
  CHECK(grid[0] == 0.25);
  CHECK(cfg.channel_at(0.25).kind == qec::ChannelKind::PhaseFlip);

  qec::ExperimentConfig bad = cfg;
  bad.channel_kind = "phase_damping";
  CHECK_THROWS(bad.validate());
}

TEST_CASE("missing keys are reported") {
  CHECK_THROWS(qec::ExperimentConfig::from_text("code = bitflip3\n"));
  CHECK_THROWS(qec::ExperimentConfig::from_text("trials = 10\nepsilon_start = 0.1\n"));
}
