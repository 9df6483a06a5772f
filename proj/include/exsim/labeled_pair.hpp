// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file labeled_pair.hpp
 * @brief First-quantized two-particle states tagged by source.
 *
 * A LabeledState maps an ordered pair of single-particle paths
 * (path of the L-particle, path of the R-particle) to a complex amplitude.
 * Nothing about exchange symmetry is built in; bosonic and fermionic
 * behavior appears only through explicit projection.
 *
 * Paths come in two stages: pre-detector {A, A', B, B'} and detector
 * {D1, D2, D1', D2'}. A, B, D1, D2 lie in region V; the primed paths lie in
 * region E.
 */

#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "exsim/coincidence.hpp"
#include "exsim/fock.hpp"

namespace exsim {

/// A path label that is not part of the interferometer, or a state whose
/// terms mix pre-detector and detector stages.
class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (path of the L-particle, path of the R-particle).
using PathPair = std::pair<ModeId, ModeId>;

struct LabeledState {
  std::map<PathPair, Amplitude> terms;

  Amplitude amplitude(const ModeId& l_path, const ModeId& r_path) const;
  bool empty() const { return terms.empty(); }
};

enum class PathStage { PreDetector, Detector };
enum class Region { V, E };

/// Throws PathError for a label outside the eight interferometer paths.
PathStage stage_of(const ModeId& path);
Region region_of(const ModeId& path);

double norm(const LabeledState& s);
Amplitude inner_product(const LabeledState& a, const LabeledState& b);
LabeledState scale(const LabeledState& s, Amplitude factor);
LabeledState add(const LabeledState& a, const LabeledState& b);
LabeledState prune(const LabeledState& s, double tol = kPruneTolerance);
double max_abs_difference(const LabeledState& a, const LabeledState& b);

/// ½ (|A⟩ − |A'⟩)^L ⊗ (|B⟩ − e^{iφ}|B'⟩)^R.
LabeledState build_initial(double phi);

/// Split into the same-region part (both particles bound for V, or both for
/// E) and the one-each part. The input satisfies
///
///     s = same_coeff · same_region + one_each_coeff · one_each
///
/// with both components normalized. Each component's global phase is fixed
/// so that its first term whose R-particle avoided the phase-shifted arm B'
/// is real and positive. For the initial state this yields
/// s = 2^{-1/2} (same_region − one_each).
struct RegionSplit {
  LabeledState same_region;
  LabeledState one_each;
  double same_weight = 0.0;
  double one_each_weight = 0.0;
  Amplitude same_coeff;
  Amplitude one_each_coeff;
};

RegionSplit split_regions(const LabeledState& s);

/// Sends every pre-detector path through its region's beam splitter:
/// A -> (D1+D2)/√2, B -> (D1−D2)/√2, A' -> (D1'+D2')/√2, B' -> (D1'−D2')/√2.
LabeledState evolve_labeled(const LabeledState& s);

/// Swaps which particle sits on which path: (p, q) -> (q, p).
LabeledState exchange(const LabeledState& s);

enum class Parity { Symmetric, Antisymmetric };

/// Normalized (s ± exchange(s)); the empty state when the projection vanishes.
LabeledState project(const LabeledState& s, Parity parity);

/// Born probabilities of unordered detector pairs. Throws PathError if any
/// term sits on a pre-detector path.
std::map<DetectorPair, double> detection_distribution(const LabeledState& s);

}  // namespace exsim
