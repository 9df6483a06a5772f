// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "exsim/experiment.hpp"
#include "exsim/paths.hpp"

using namespace exsim;

namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

ExperimentConfig config(double phi, Statistics stats) {
  ExperimentConfig cfg;
  cfg.phi = phi;
  cfg.statistics = stats;
  return cfg;
}

OccupationState pattern(std::initializer_list<std::pair<ModeId, unsigned>> counts) {
  const RegistryPtr reg = interferometer_registry();
  OccupationState occ(reg->size(), 1);
  for (const auto& [mode, n] : counts) occ = occ.with_count(reg->index_of(mode), 0, n);
  return occ;
}

}  // namespace

TEST_CASE("interferometer circuit layout") {
  const Circuit circuit = build_fig1_circuit(config(0.3, Statistics::Boson));
  CHECK(circuit.size() == 5);
  CHECK(std::holds_alternative<PhaseShift>(circuit.elements()[2]));
  CHECK(std::get<PhaseShift>(circuit.elements()[2]).mode == path::Bp);
  CHECK_THROWS(build_fig1_circuit(config(std::nan(""), Statistics::Boson)));
}

TEST_CASE("initial state holds one particle on each source") {
  const RegistryPtr reg = interferometer_registry();
  for (Statistics stats : kAllStatistics) {
    const StateVector s = initial_state(reg, stats);
    CHECK(s.size() == 1);
    CHECK(s.particle_number() == 2u);
    CHECK(std::abs(norm(s) - 1.0) < kTol);
  }
}

TEST_CASE("evolved state is normalized and fermions never share a mode") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.0, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    const double phi = dist(rng);
    CHECK(std::abs(norm(evolve(config(phi, Statistics::Boson))) - 1.0) < kTol);
    const StateVector fermions = evolve(config(phi, Statistics::Fermion));
    CHECK(std::abs(norm(fermions) - 1.0) < kTol);
    for (const auto& [occ, amp] : fermions.terms()) {
      for (std::size_t m = 0; m < occ.mode_count(); ++m) CHECK(occ.mode_total(m) <= 1);
    }
  }
}

TEST_CASE("classify") {
  const RegistryPtr reg = interferometer_registry();
  using namespace path;
  CHECK(classify(pattern({{D1, 1}, {D1p, 1}}), *reg) == CoincidenceClass::OneEach);
  CHECK(classify(pattern({{D1, 2}}), *reg) == CoincidenceClass::BothV);
  CHECK(classify(pattern({{D1p, 1}, {D2p, 1}}), *reg) == CoincidenceClass::BothE);
  CHECK_THROWS_AS(classify(pattern({{D1, 1}}), *reg), PatternError);
  CHECK_THROWS_AS(classify(pattern({{D1, 1}, {D2, 1}, {D2p, 1}}), *reg), PatternError);
  CHECK_THROWS_AS(classify(pattern({{A, 1}, {D2, 1}}), *reg), PatternError);
}

TEST_CASE("coincidence tables at reference phases") {
  const CoincidenceTable boson0 = run_experiment(config(0.0, Statistics::Boson));
  CHECK(*boson0.p_same_cond == doctest::Approx(1.0).epsilon(kTol));
  CHECK(std::abs(*boson0.p_cross_cond) < kTol);

  const CoincidenceTable fermion0 = run_experiment(config(0.0, Statistics::Fermion));
  CHECK(std::abs(*fermion0.p_same_cond) < kTol);
  CHECK(*fermion0.p_cross_cond == doctest::Approx(1.0).epsilon(kTol));

  const CoincidenceTable boson_quarter = run_experiment(config(kPi / 2, Statistics::Boson));
  CHECK(std::abs(*boson_quarter.p_same_cond - 0.5) < kTol);
  CHECK(std::abs(boson_quarter.weight(CoincidenceClass::BothV) - 0.25) < kTol);
  CHECK(std::abs(boson_quarter.weight(CoincidenceClass::BothE) - 0.25) < kTol);
  CHECK(std::abs(boson_quarter.weight(CoincidenceClass::OneEach) - 0.5) < kTol);

  for (double phi : {0.0, 1.0, 2.5, 4.0}) {
    const CoincidenceTable dist = run_experiment(config(phi, Statistics::Distinguishable));
    CHECK(std::abs(*dist.p_same_cond - 0.5) < kTol);
    CHECK(std::abs(*dist.p_cross_cond - 0.5) < kTol);
  }

  const CoincidenceTable fermion_pi = run_experiment(config(kPi, Statistics::Fermion));
  CHECK(std::abs(*fermion_pi.p_same_cond - 1.0) < kTol);
}

TEST_CASE("table invariants over the phase") {
  for (Statistics stats : kAllStatistics) {
    for (int k = 0; k < 16; ++k) {
      const double phi = 2 * kPi * k / 16;
      const CoincidenceTable t = run_experiment(config(phi, stats));
      double total = 0.0;
      for (double w : t.class_weights) total += w;
      CHECK(std::abs(total - 1.0) < kTol);
      CHECK(std::abs(*t.p_same_cond + *t.p_cross_cond - 1.0) < kTol);
      CHECK(t.per_pattern.size() == 10);

      const CoincidenceTable mirrored = run_experiment(config(-phi, stats));
      for (const auto& [pair, p] : t.per_pattern) CHECK(std::abs(p - mirrored.per_pattern.at(pair)) < kTol);
    }
  }
}

TEST_CASE("undefined conditionals when no one-each event is possible") {
  const CoincidenceTable t = summarize({{DetectorPair{Detector::D1, Detector::D1}, 1.0}});
  CHECK_FALSE(t.p_same_cond.has_value());
  CHECK_FALSE(t.p_cross_cond.has_value());
  CHECK(one_each_conditional(t).empty());
  CHECK(t.per_pattern.size() == 10);
}

TEST_CASE("closed form") {
  const ConditionalPair boson_pi = closed_form(kPi, Statistics::Boson);
  CHECK(std::abs(boson_pi.p_same) < kTol);
  CHECK(std::abs(boson_pi.p_cross - 1.0) < kTol);
  const ConditionalPair fermion_third = closed_form(kPi / 3, Statistics::Fermion);
  CHECK(std::abs(fermion_third.p_same - 0.25) < kTol);
  CHECK(std::abs(fermion_third.p_cross - 0.75) < kTol);
  const ConditionalPair dist = closed_form(1.234, Statistics::Distinguishable);
  CHECK(dist.p_same == 0.5);
  CHECK(dist.p_cross == 0.5);
}

TEST_CASE("bunching and antibunching inside one region") {
  using D = Detector;
  for (double phi : {0.0, 0.9, kPi / 2, 3.0}) {
    const BunchingReport boson = bunching_report(config(phi, Statistics::Boson));
    CHECK(std::abs(boson.probability({D::D1, D::D1}) - 0.125) < kTol);
    CHECK(std::abs(boson.probability({D::D2, D::D2}) - 0.125) < kTol);
    CHECK(std::abs(boson.probability({D::D1, D::D2})) < kTol);
    CHECK(std::abs(boson.double_occupancy_total(CoincidenceClass::BothV) -
                   boson.class_total(CoincidenceClass::BothV)) < kTol);

    const BunchingReport fermion = bunching_report(config(phi, Statistics::Fermion));
    CHECK(std::abs(fermion.probability({D::D1, D::D2}) - 0.25) < kTol);
    CHECK(std::abs(fermion.probability({D::D1p, D::D2p}) - 0.25) < kTol);
    CHECK(fermion.double_occupancy_total(CoincidenceClass::BothV) == 0.0);
    CHECK(fermion.double_occupancy_total(CoincidenceClass::BothE) == 0.0);
  }
  const BunchingReport quarter = bunching_report(config(kPi / 2, Statistics::Boson));
  CHECK(std::abs(quarter.class_total(CoincidenceClass::BothV) +
                 quarter.class_total(CoincidenceClass::BothE) - 0.5) < kTol);
}

TEST_CASE("beam-splitter convention choices do not change any probability") {
  const std::optional<BeamSplitterConvention> choices[] = {
      std::nullopt, BeamSplitterConvention::PlusMinus, BeamSplitterConvention::MinusFirst};
  for (Statistics stats : kAllStatistics) {
    for (double phi : {0.0, 0.8, 2.2}) {
      const CoincidenceTable reference = run_experiment(config(phi, stats));
      for (const auto& src : choices) {
        for (const auto& det : choices) {
          ExperimentConfig cfg = config(phi, stats);
          cfg.conventions = {src, det};
          const CoincidenceTable t = run_experiment(cfg);
          for (const auto& [pair, p] : reference.per_pattern) {
            CHECK(std::abs(t.per_pattern.at(pair) - p) < kTol);
          }
        }
      }
    }
  }
}

TEST_CASE("completion of the unused source-splitter column is invisible") {
  // Same used column as minus-first, unused column negated.
  const double h = 1.0 / std::numbers::sqrt2;
  Eigen::MatrixXcd alt(2, 2);
  alt << h, -h,
         -h, -h;
  using namespace path;
  for (Statistics stats : kAllStatistics) {
    const double phi = 1.1;
    const RegistryPtr reg = interferometer_registry();
    const Circuit custom(reg, {Custom{ModeUnitary({L, vL}, {A, Ap}, alt)},
                               Custom{ModeUnitary({R, vR}, {B, Bp}, alt)},
                               PhaseShift{Bp, phi},
                               BeamSplitter{A, B, D1, D2, BeamSplitterConvention::PlusMinus},
                               BeamSplitter{Ap, Bp, D1p, D2p, BeamSplitterConvention::PlusMinus}});
    const StateVector reference = evolve(config(phi, stats));
    CHECK(max_abs_difference(run_circuit(custom, initial_state(reg, stats)), reference) < kTol);
  }
}
