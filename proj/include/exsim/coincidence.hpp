// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file coincidence.hpp
 * @brief Detector labels, two-particle detection patterns and coincidence
 *        tables.
 *
 * Plain data shared by the evolution engine and the brute-force oracle.
 * Nothing here depends on the Fock-space machinery.
 */

#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace exsim {

/// The four detectors. D1, D2 sit behind the V-region beam splitter,
/// D1p, D2p (printed D1', D2') behind the E-region one.
enum class Detector { D1, D2, D1p, D2p };

inline constexpr std::array<Detector, 4> kAllDetectors = {
    Detector::D1, Detector::D2, Detector::D1p, Detector::D2p};

constexpr std::string_view label(Detector d) {
  switch (d) {
    case Detector::D1:
      return "D1";
    case Detector::D2:
      return "D2";
    case Detector::D1p:
      return "D1'";
    case Detector::D2p:
      return "D2'";
  }
  return "?";
}

constexpr std::optional<Detector> detector_from_label(std::string_view text) {
  for (Detector d : kAllDetectors) {
    if (label(d) == text) return d;
  }
  return std::nullopt;
}

constexpr bool in_region_v(Detector d) { return d == Detector::D1 || d == Detector::D2; }

/// 1 for D1/D1', 2 for D2/D2'.
constexpr int detector_index(Detector d) {
  return (d == Detector::D1 || d == Detector::D1p) ? 1 : 2;
}

/// Unordered pair of detectors that fired; `first <= second` always.
/// A pair with first == second is a double occupancy of one detector.
struct DetectorPair {
  Detector first;
  Detector second;

  constexpr DetectorPair(Detector a, Detector b)
      : first(a < b ? a : b), second(a < b ? b : a) {}

  constexpr bool double_occupancy() const { return first == second; }
  constexpr auto operator<=>(const DetectorPair&) const = default;
};

inline std::string to_string(const DetectorPair& pair) {
  std::string out(label(pair.first));
  out += '&';
  out += label(pair.second);
  return out;
}

/// All ten two-particle detector patterns, in canonical order.
constexpr std::array<DetectorPair, 10> all_detector_pairs() {
  using D = Detector;
  return {DetectorPair{D::D1, D::D1},   DetectorPair{D::D1, D::D2},
          DetectorPair{D::D1, D::D1p},  DetectorPair{D::D1, D::D2p},
          DetectorPair{D::D2, D::D2},   DetectorPair{D::D2, D::D1p},
          DetectorPair{D::D2, D::D2p},  DetectorPair{D::D1p, D::D1p},
          DetectorPair{D::D1p, D::D2p}, DetectorPair{D::D2p, D::D2p}};
}

enum class CoincidenceClass { BothV, BothE, OneEach };

inline constexpr std::array<CoincidenceClass, 3> kAllClasses = {
    CoincidenceClass::BothV, CoincidenceClass::BothE, CoincidenceClass::OneEach};

constexpr std::string_view to_string(CoincidenceClass c) {
  switch (c) {
    case CoincidenceClass::BothV:
      return "both_v";
    case CoincidenceClass::BothE:
      return "both_e";
    case CoincidenceClass::OneEach:
      return "one_each";
  }
  return "?";
}

constexpr CoincidenceClass classify(const DetectorPair& pair) {
  const bool a = in_region_v(pair.first);
  const bool b = in_region_v(pair.second);
  if (a && b) return CoincidenceClass::BothV;
  if (!a && !b) return CoincidenceClass::BothE;
  return CoincidenceClass::OneEach;
}

/// True for a one-each pair {Di, Di'}; false for cross pairs and for
/// pairs inside one region.
constexpr bool same_index(const DetectorPair& pair) {
  return classify(pair) == CoincidenceClass::OneEach &&
         detector_index(pair.first) == detector_index(pair.second);
}

struct CoincidenceTable {
  /// Indexed by CoincidenceClass.
  std::array<double, 3> class_weights{};
  /// Conditional on a OneEach event. Empty when the OneEach weight is
  /// below 1e-12 and the conditional is undefined.
  std::optional<double> p_same_cond;
  std::optional<double> p_cross_cond;
  /// Unconditional Born probability of every pattern (all ten present).
  std::map<DetectorPair, double> per_pattern;

  double weight(CoincidenceClass c) const {
    return class_weights[static_cast<std::size_t>(c)];
  }
};

inline constexpr double kConditionalFloor = 1e-12;

/// Builds a table from unconditional pattern probabilities. Patterns missing
/// from `per_pattern` are recorded with probability zero.
inline CoincidenceTable summarize(const std::map<DetectorPair, double>& per_pattern) {
  CoincidenceTable table;
  for (const DetectorPair& pair : all_detector_pairs()) table.per_pattern[pair] = 0.0;
  double same = 0.0;
  double cross = 0.0;
  for (const auto& [pair, p] : per_pattern) {
    table.per_pattern[pair] += p;
    const CoincidenceClass c = classify(pair);
    table.class_weights[static_cast<std::size_t>(c)] += p;
    if (c == CoincidenceClass::OneEach) (same_index(pair) ? same : cross) += p;
  }
  const double one_each = table.weight(CoincidenceClass::OneEach);
  if (one_each >= kConditionalFloor) {
    table.p_same_cond = same / one_each;
    table.p_cross_cond = cross / one_each;
  }
  return table;
}

}  // namespace exsim
