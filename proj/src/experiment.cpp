// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "exsim/experiment.hpp"

#include <cmath>
#include <vector>

#include "exsim/labeled_pair.hpp"
#include "exsim/paths.hpp"

namespace exsim {

RegistryPtr interferometer_registry() {
  using namespace path;
  static const RegistryPtr registry =
      make_registry({L, R, vL, vR, A, Ap, B, Bp, D1, D2, D1p, D2p});
  return registry;
}

Circuit build_fig1_circuit(const ExperimentConfig& cfg) {
  using namespace path;
  if (!std::isfinite(cfg.phi)) throw std::invalid_argument("phase must be finite");
  const auto sources = cfg.conventions.sources.value_or(BeamSplitterConvention::MinusFirst);
  const auto detectors = cfg.conventions.detectors.value_or(BeamSplitterConvention::PlusMinus);
  return Circuit(interferometer_registry(),
                 {
                     BeamSplitter{L, vL, A, Ap, sources},
                     BeamSplitter{R, vR, B, Bp, sources},
                     PhaseShift{Bp, cfg.phi},
                     BeamSplitter{A, B, D1, D2, detectors},
                     BeamSplitter{Ap, Bp, D1p, D2p, detectors},
                 });
}

StateVector initial_state(const RegistryPtr& registry, Statistics stats) {
  const StateVector vac = vacuum(registry, stats);
  if (stats == Statistics::Distinguishable) {
    return create(create(vac, path::L, 0), path::R, 1);
  }
  return create(create(vac, path::L), path::R);
}

StateVector evolve(const ExperimentConfig& cfg) {
  const Circuit circuit = build_fig1_circuit(cfg);
  return run_circuit(circuit, initial_state(circuit.registry_ptr(), cfg.statistics),
                     cfg.prune_tolerance);
}

DetectorPair detector_pair(const OccupationState& pattern, const ModeRegistry& registry) {
  if (pattern.mode_count() != registry.size()) {
    throw PatternError("pattern layout does not match the registry");
  }
  std::vector<Detector> hits;
  for (std::size_t m = 0; m < registry.size(); ++m) {
    const unsigned n = pattern.mode_total(m);
    if (n == 0) continue;
    const auto d = path::as_detector(registry.at(m));
    if (!d) throw PatternError("particle left on non-detector mode '" + registry.at(m).label + "'");
    hits.insert(hits.end(), n, *d);
  }
  if (hits.size() != 2) {
    throw PatternError("expected 2 detected particles, got " + std::to_string(hits.size()));
  }
  return DetectorPair{hits[0], hits[1]};
}

CoincidenceClass classify(const OccupationState& pattern, const ModeRegistry& registry) {
  return classify(detector_pair(pattern, registry));
}

CoincidenceTable run_experiment(const ExperimentConfig& cfg) {
  const StateVector out = evolve(cfg);
  std::map<DetectorPair, double> per_pattern;
  for (const auto& [occ, amp] : out.terms()) {
    per_pattern[detector_pair(occ, out.registry())] += std::norm(amp);
  }
  return summarize(per_pattern);
}

ConditionalPair closed_form(double phi, Statistics stats) {
  const double c = std::cos(phi);
  switch (stats) {
    case Statistics::Boson:
      return {0.5 * (1.0 + c), 0.5 * (1.0 - c)};
    case Statistics::Fermion:
      return {0.5 * (1.0 - c), 0.5 * (1.0 + c)};
    case Statistics::Distinguishable:
      break;
  }
  return {0.5, 0.5};
}

double BunchingReport::probability(const DetectorPair& pair) const {
  auto cls = by_class.find(classify(pair));
  if (cls == by_class.end()) return 0.0;
  auto it = cls->second.find(pair);
  return it == cls->second.end() ? 0.0 : it->second;
}

double BunchingReport::class_total(CoincidenceClass c) const {
  double sum = 0.0;
  if (auto it = by_class.find(c); it != by_class.end()) {
    for (const auto& [pair, p] : it->second) sum += p;
  }
  return sum;
}

double BunchingReport::double_occupancy_total(CoincidenceClass c) const {
  double sum = 0.0;
  if (auto it = by_class.find(c); it != by_class.end()) {
    for (const auto& [pair, p] : it->second) {
      if (pair.double_occupancy()) sum += p;
    }
  }
  return sum;
}

BunchingReport bunching_report(const ExperimentConfig& cfg) {
  const CoincidenceTable table = run_experiment(cfg);
  BunchingReport report;
  for (const auto& [pair, p] : table.per_pattern) report.by_class[classify(pair)][pair] = p;
  return report;
}

std::map<DetectorPair, double> one_each_conditional(const CoincidenceTable& table) {
  std::map<DetectorPair, double> out;
  const double w = table.weight(CoincidenceClass::OneEach);
  if (w < kConditionalFloor) return out;
  for (const auto& [pair, p] : table.per_pattern) {
    if (classify(pair) == CoincidenceClass::OneEach) out[pair] = p / w;
  }
  return out;
}

std::map<DetectorPair, double> labeled_one_each_distribution(double phi, Statistics stats) {
  const LabeledState evolved = evolve_labeled(split_regions(build_initial(phi)).one_each);
  switch (stats) {
    case Statistics::Boson:
      return detection_distribution(project(evolved, Parity::Symmetric));
    case Statistics::Fermion:
      return detection_distribution(project(evolved, Parity::Antisymmetric));
    case Statistics::Distinguishable:
      break;
  }
  return detection_distribution(evolved);
}

}  // namespace exsim
