// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file experiment.hpp
 * @brief The two-source interferometer end to end, in second quantization.
 *
 * One particle is created on L and one on R, the state is pushed through
 *
 *   BS_L (L, vL -> A, A')      minus-first
 *   BS_R (R, vR -> B, B')      minus-first
 *   phase φ on B'
 *   BS_V (A, B   -> D1, D2)    plus-minus
 *   BS_E (A', B' -> D1', D2')  plus-minus
 *
 * and the detector occupations are read out as coincidence tables.
 */

#pragma once

#include <map>
#include <optional>

#include "exsim/coincidence.hpp"
#include "exsim/fock.hpp"
#include "exsim/mode_algebra.hpp"

namespace exsim {

struct ConventionOverrides {
  std::optional<BeamSplitterConvention> sources;    ///< BS_L and BS_R
  std::optional<BeamSplitterConvention> detectors;  ///< BS_V and BS_E
};

struct ExperimentConfig {
  double phi = 0.0;
  Statistics statistics = Statistics::Boson;
  ConventionOverrides conventions;
  double prune_tolerance = kPruneTolerance;
};

/// Detector patterns with the wrong particle count or with particles left
/// outside the detectors.
class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// L, R, vL, vR, A, A', B, B', D1, D2, D1', D2' in that canonical order.
RegistryPtr interferometer_registry();

Circuit build_fig1_circuit(const ExperimentConfig& cfg);

/// a†_R a†_L |0⟩; for Distinguishable the L-particle is species 0 and the
/// R-particle species 1.
StateVector initial_state(const RegistryPtr& registry, Statistics stats);

/// Initial state pushed through the full circuit.
StateVector evolve(const ExperimentConfig& cfg);

/// Detector pair a two-particle occupation lands on.
DetectorPair detector_pair(const OccupationState& pattern, const ModeRegistry& registry);

CoincidenceClass classify(const OccupationState& pattern, const ModeRegistry& registry);

CoincidenceTable run_experiment(const ExperimentConfig& cfg);

struct ConditionalPair {
  double p_same;
  double p_cross;
};

/// ½(1 ± cos φ) for bosons and fermions, ½ each for distinguishable particles.
ConditionalPair closed_form(double phi, Statistics stats);

/// Pattern probabilities grouped by coincidence class.
struct BunchingReport {
  std::map<CoincidenceClass, std::map<DetectorPair, double>> by_class;

  double probability(const DetectorPair& pair) const;
  double class_total(CoincidenceClass c) const;
  /// Probability within class `c` carried by double-occupancy patterns.
  double double_occupancy_total(CoincidenceClass c) const;
};

BunchingReport bunching_report(const ExperimentConfig& cfg);

/// One-each pattern probabilities conditioned on a OneEach event. Empty when
/// the conditional is undefined.
std::map<DetectorPair, double> one_each_conditional(const CoincidenceTable& table);

/// The same conditional distribution computed in the source-labeled picture:
/// the evolved one-each component, symmetrized for bosons, antisymmetrized
/// for fermions and left as is for distinguishable particles.
std::map<DetectorPair, double> labeled_one_each_distribution(double phi, Statistics stats);

}  // namespace exsim
