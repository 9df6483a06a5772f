// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "exsim/labeled_pair.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "exsim/paths.hpp"

namespace exsim {

namespace {

struct PathInfo {
  const ModeId* mode;
  PathStage stage;
  Region region;
};

const std::vector<PathInfo>& path_table() {
  static const std::vector<PathInfo> table = {
      {&path::A, PathStage::PreDetector, Region::V},  {&path::Ap, PathStage::PreDetector, Region::E},
      {&path::B, PathStage::PreDetector, Region::V},  {&path::Bp, PathStage::PreDetector, Region::E},
      {&path::D1, PathStage::Detector, Region::V},    {&path::D2, PathStage::Detector, Region::V},
      {&path::D1p, PathStage::Detector, Region::E},   {&path::D2p, PathStage::Detector, Region::E},
  };
  return table;
}

const PathInfo& info(const ModeId& p) {
  for (const PathInfo& entry : path_table()) {
    if (*entry.mode == p) return entry;
  }
  throw PathError("'" + p.label + "' is not an interferometer path");
}

struct Branch {
  ModeId path;
  double coeff;
};

std::vector<Branch> detector_branches(const ModeId& p) {
  const double h = 1.0 / std::numbers::sqrt2;
  if (p == path::A) return {{path::D1, h}, {path::D2, h}};
  if (p == path::B) return {{path::D1, h}, {path::D2, -h}};
  if (p == path::Ap) return {{path::D1p, h}, {path::D2p, h}};
  if (p == path::Bp) return {{path::D1p, h}, {path::D2p, -h}};
  throw PathError("'" + p.label + "' is not a pre-detector path");
}

// Normalizes `part` and rotates its phase onto the reference term; returns
// the coefficient that multiplies the normalized component inside the source.
Amplitude normalize_component(LabeledState& part) {
  const double n = norm(part);
  if (n == 0.0) {
    part.terms.clear();
    return {};
  }
  std::optional<Amplitude> reference;
  for (const auto& [pair, amp] : part.terms) {
    if (pair.second != path::Bp && std::abs(amp) > kPruneTolerance) {
      reference = amp;
      break;
    }
  }
  if (!reference) reference = part.terms.begin()->second;
  const Amplitude phase = *reference / std::abs(*reference);
  part = scale(part, 1.0 / (n * phase));
  return n * phase;
}

}  // namespace

Amplitude LabeledState::amplitude(const ModeId& l_path, const ModeId& r_path) const {
  auto it = terms.find({l_path, r_path});
  return it == terms.end() ? Amplitude{} : it->second;
}

PathStage stage_of(const ModeId& p) { return info(p).stage; }
Region region_of(const ModeId& p) { return info(p).region; }

double norm(const LabeledState& s) {
  double sq = 0.0;
  for (const auto& [pair, amp] : s.terms) sq += std::norm(amp);
  return std::sqrt(sq);
}

Amplitude inner_product(const LabeledState& a, const LabeledState& b) {
  Amplitude sum{};
  for (const auto& [pair, amp] : a.terms) {
    auto it = b.terms.find(pair);
    if (it != b.terms.end()) sum += std::conj(amp) * it->second;
  }
  return sum;
}

LabeledState scale(const LabeledState& s, Amplitude factor) {
  LabeledState out = s;
  for (auto& [pair, amp] : out.terms) amp *= factor;
  return out;
}

LabeledState add(const LabeledState& a, const LabeledState& b) {
  LabeledState out = a;
  for (const auto& [pair, amp] : b.terms) out.terms[pair] += amp;
  return out;
}

LabeledState prune(const LabeledState& s, double tol) {
  LabeledState out;
  for (const auto& [pair, amp] : s.terms) {
    if (std::abs(amp) >= tol) out.terms.emplace_hint(out.terms.end(), pair, amp);
  }
  return out;
}

double max_abs_difference(const LabeledState& a, const LabeledState& b) {
  double worst = 0.0;
  for (const auto& [pair, amp] : a.terms) {
    worst = std::max(worst, std::abs(amp - b.amplitude(pair.first, pair.second)));
  }
  for (const auto& [pair, amp] : b.terms) {
    if (!a.terms.contains(pair)) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

LabeledState build_initial(double phi) {
  const Amplitude shifted = std::polar(1.0, phi);
  const std::pair<ModeId, Amplitude> left[] = {{path::A, 1.0}, {path::Ap, -1.0}};
  const std::pair<ModeId, Amplitude> right[] = {{path::B, 1.0}, {path::Bp, -shifted}};
  LabeledState s;
  for (const auto& [lp, la] : left) {
    for (const auto& [rp, ra] : right) s.terms[{lp, rp}] = 0.5 * la * ra;
  }
  return s;
}

RegionSplit split_regions(const LabeledState& s) {
  std::optional<PathStage> stage;
  RegionSplit split;
  for (const auto& [pair, amp] : s.terms) {
    for (const ModeId* p : {&pair.first, &pair.second}) {
      const PathStage st = stage_of(*p);
      if (stage && *stage != st) throw PathError("state mixes pre-detector and detector paths");
      stage = st;
    }
    LabeledState& target =
        region_of(pair.first) == region_of(pair.second) ? split.same_region : split.one_each;
    target.terms[pair] = amp;
  }
  const double total = norm(s);
  split.same_coeff = normalize_component(split.same_region);
  split.one_each_coeff = normalize_component(split.one_each);
  if (total > 0.0) {
    split.same_weight = std::norm(split.same_coeff) / (total * total);
    split.one_each_weight = std::norm(split.one_each_coeff) / (total * total);
  }
  return split;
}

LabeledState evolve_labeled(const LabeledState& s) {
  LabeledState out;
  for (const auto& [pair, amp] : s.terms) {
    for (const Branch& l : detector_branches(pair.first)) {
      for (const Branch& r : detector_branches(pair.second)) {
        out.terms[{l.path, r.path}] += amp * l.coeff * r.coeff;
      }
    }
  }
  return prune(out);
}

LabeledState exchange(const LabeledState& s) {
  LabeledState out;
  for (const auto& [pair, amp] : s.terms) out.terms[{pair.second, pair.first}] = amp;
  return out;
}

LabeledState project(const LabeledState& s, Parity parity) {
  const double sign = parity == Parity::Symmetric ? 1.0 : -1.0;
  LabeledState raw = prune(add(s, scale(exchange(s), sign)));
  const double n = norm(raw);
  if (n < kPruneTolerance) return {};
  return scale(raw, 1.0 / n);
}

std::map<DetectorPair, double> detection_distribution(const LabeledState& s) {
  std::map<DetectorPair, double> out;
  for (const auto& [pair, amp] : s.terms) {
    const auto a = path::as_detector(pair.first);
    const auto b = path::as_detector(pair.second);
    if (!a || !b) {
      throw PathError("detection needs detector paths, got (" + pair.first.label + ", " +
                      pair.second.label + ")");
    }
    out[DetectorPair{*a, *b}] += std::norm(amp);
  }
  return out;
}

}  // namespace exsim
