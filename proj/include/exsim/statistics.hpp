// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

namespace exsim {

/// Exchange statistics of the particles in a state.
///
/// Distinguishable is the control case: each particle carries a species tag
/// (its source) and no exchange interference can occur.
enum class Statistics { Boson, Fermion, Distinguishable };

inline constexpr Statistics kAllStatistics[] = {
    Statistics::Boson, Statistics::Fermion, Statistics::Distinguishable};

constexpr std::string_view to_string(Statistics stats) {
  switch (stats) {
    case Statistics::Boson:
      return "boson";
    case Statistics::Fermion:
      return "fermion";
    case Statistics::Distinguishable:
      return "distinguishable";
  }
  return "?";
}

constexpr std::optional<Statistics> parse_statistics(std::string_view text) {
  for (Statistics s : kAllStatistics) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

}  // namespace exsim
