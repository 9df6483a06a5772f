// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "exsim/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace exsim::oracle {

namespace {

// First stage: source beam splitters. L -> +A −A', R -> +B −e^{iφ}B'.
// Second stage: A -> +D1 +D2, B -> +D1 −D2, A' -> +D1' +D2', B' -> +D1' −D2'.
// Every hop carries a further factor 2^{-1/2}.
struct Hop {
  Source source;
  Detector detector;
  int sign;
  bool through_phase;
};

constexpr Hop kPathTable[] = {
    {Source::L, Detector::D1, +1, false},  {Source::L, Detector::D2, +1, false},
    {Source::L, Detector::D1p, -1, false}, {Source::L, Detector::D2p, -1, false},
    {Source::R, Detector::D1, +1, false},  {Source::R, Detector::D2, -1, false},
    {Source::R, Detector::D1p, -1, true},  {Source::R, Detector::D2p, +1, true},
};

}  // namespace

std::complex<double> path_amplitude(Source source, Detector detector, double phi) {
  for (const Hop& hop : kPathTable) {
    if (hop.source != source || hop.detector != detector) continue;
    const std::complex<double> phase = hop.through_phase ? std::polar(1.0, phi) : 1.0;
    return 0.5 * hop.sign * phase;
  }
  return 0.0;
}

PathAmplitudeMatrix path_matrix(const DetectorPair& pair, double phi) {
  return {{{path_amplitude(Source::L, pair.first, phi), path_amplitude(Source::R, pair.first, phi)},
           {path_amplitude(Source::L, pair.second, phi),
            path_amplitude(Source::R, pair.second, phi)}}};
}

std::complex<double> permanent(const PathAmplitudeMatrix& m) {
  return m[0][0] * m[1][1] + m[0][1] * m[1][0];
}

std::complex<double> determinant(const PathAmplitudeMatrix& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

double outcome_probability(const DetectorPair& pair, double phi, Statistics stats) {
  const PathAmplitudeMatrix m = path_matrix(pair, phi);
  switch (stats) {
    case Statistics::Boson:
      // Divide by the product of occupation factorials: 2! for a doubled detector.
      return std::norm(permanent(m)) / (pair.double_occupancy() ? 2.0 : 1.0);
    case Statistics::Fermion:
      return pair.double_occupancy() ? 0.0 : std::norm(determinant(m));
    case Statistics::Distinguishable: {
      // L on first & R on second, plus the swapped assignment when it is a
      // different outcome.
      double p = std::norm(m[0][0] * m[1][1]);
      if (!pair.double_occupancy()) p += std::norm(m[1][0] * m[0][1]);
      return p;
    }
  }
  return 0.0;
}

std::map<DetectorPair, double> outcome_distribution(double phi, Statistics stats) {
  std::map<DetectorPair, double> out;
  for (const DetectorPair& pair : all_detector_pairs()) {
    out[pair] = outcome_probability(pair, phi, stats);
  }
  return out;
}

OracleReport verify(const CoincidenceTable& table, double phi, Statistics stats, double tol) {
  OracleReport report;
  report.probabilities = outcome_distribution(phi, stats);
  for (const auto& [pair, expected] : report.probabilities) {
    auto it = table.per_pattern.find(pair);
    const double got = it == table.per_pattern.end() ? 0.0 : it->second;
    report.max_deviation = std::max(report.max_deviation, std::abs(got - expected));
  }
  report.pass = report.max_deviation < tol;
  return report;
}

}  // namespace exsim::oracle
