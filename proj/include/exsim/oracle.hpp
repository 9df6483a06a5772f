// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Brute-force path-sum verifier for the two-source interferometer.
 *
 * Independent of the Fock-space engine: the single-particle path table is
 * written out by hand and two-particle amplitudes come from a 2×2 permanent
 * (bosons) or determinant (fermions). Only the plain data headers are shared.
 */

#pragma once

#include <array>
#include <complex>
#include <map>

#include "exsim/coincidence.hpp"
#include "exsim/statistics.hpp"

namespace exsim::oracle {

enum class Source { L, R };

/// Amplitude for a single particle from `source` to reach `detector`.
std::complex<double> path_amplitude(Source source, Detector detector, double phi);

/// M[row][col]: row = detector slot of the pair (first, second),
/// col = source (L, R).
using PathAmplitudeMatrix = std::array<std::array<std::complex<double>, 2>, 2>;

PathAmplitudeMatrix path_matrix(const DetectorPair& pair, double phi);

std::complex<double> permanent(const PathAmplitudeMatrix& m);
std::complex<double> determinant(const PathAmplitudeMatrix& m);

double outcome_probability(const DetectorPair& pair, double phi, Statistics stats);

/// Every pattern's probability.
std::map<DetectorPair, double> outcome_distribution(double phi, Statistics stats);

struct OracleReport {
  std::map<DetectorPair, double> probabilities;
  double max_deviation = 0.0;
  bool pass = false;
};

/// Compares each of the ten pattern probabilities in `table` with the path
/// sum; passes when every deviation is below `tol`.
OracleReport verify(const CoincidenceTable& table, double phi, Statistics stats, double tol);

}  // namespace exsim::oracle
