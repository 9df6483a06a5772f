// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "exsim/experiment.hpp"
#include "exsim/oracle.hpp"

using namespace exsim;

namespace {

ExperimentConfig config(double phi, Statistics stats) {
  ExperimentConfig cfg;
  cfg.phi = phi;
  cfg.statistics = stats;
  return cfg;
}

}  // namespace

TEST_CASE("engine and oracle agree pattern by pattern") {
  for (Statistics stats : kAllStatistics) {
    for (int k = 0; k < 16; ++k) {
      const double phi = 2 * std::numbers::pi * k / 16;
      const oracle::OracleReport report =
          oracle::verify(run_experiment(config(phi, stats)), phi, stats, 1e-12);
      CHECK_MESSAGE(report.pass, to_string(stats), " phi=", phi, " dev=", report.max_deviation);
    }
  }
  const double phi = std::numbers::pi / 2;
  CHECK(oracle::verify(run_experiment(config(phi, Statistics::Boson)), phi, Statistics::Boson, 1e-12).pass);
}

TEST_CASE("engine, labeled projection and oracle give one conditional distribution") {
  for (Statistics stats : kAllStatistics) {
    for (double phi : {0.0, 0.5, 1.7, 3.3, 5.9}) {
      const auto engine = one_each_conditional(run_experiment(config(phi, stats)));
      const auto labeled = labeled_one_each_distribution(phi, stats);
      const auto oracle_dist = oracle::outcome_distribution(phi, stats);
      for (const auto& [pair, p] : engine) {
        const auto it = labeled.find(pair);
        CHECK(std::abs(p - (it == labeled.end() ? 0.0 : it->second)) < 1e-12);
        CHECK(std::abs(p - 2.0 * oracle_dist.at(pair)) < 1e-12);  // one-each weight is ½
      }
    }
  }
}
