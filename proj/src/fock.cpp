// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "exsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace exsim {

ModeRegistry::ModeRegistry(std::vector<ModeId> modes) : modes_(std::move(modes)) {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (!index_.emplace(modes_[i].label, i).second) {
      throw ModeError("duplicate mode label '" + modes_[i].label + "'");
    }
  }
}

std::optional<std::size_t> ModeRegistry::find(const ModeId& mode) const {
  auto it = index_.find(mode.label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ModeRegistry::index_of(const ModeId& mode) const {
  if (auto i = find(mode)) return *i;
  throw ModeError("mode '" + mode.label + "' is not registered");
}

RegistryPtr make_registry(std::vector<ModeId> modes) {
  return std::make_shared<const ModeRegistry>(std::move(modes));
}

OccupationState::OccupationState(std::size_t mode_count, std::size_t species_count)
    : mode_count_(mode_count),
      species_count_(species_count),
      counts_(mode_count * species_count, 0) {}

unsigned OccupationState::mode_total(std::size_t mode) const {
  unsigned n = 0;
  for (std::size_t s = 0; s < species_count_; ++s) n += count(mode, s);
  return n;
}

unsigned OccupationState::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

OccupationState OccupationState::with_count(std::size_t mode, std::size_t species,
                                            unsigned count) const {
  if (count > 0xff) throw std::overflow_error("occupation count overflow");
  OccupationState out = *this;
  out.counts_.at(slot(mode, species)) = static_cast<std::uint8_t>(count);
  return out;
}

StateVector::StateVector(RegistryPtr registry, Statistics stats, std::size_t species_count,
                         Terms terms)
    : registry_(std::move(registry)),
      stats_(stats),
      species_count_(species_count),
      terms_(std::move(terms)) {
  if (!registry_) throw CompatibilityError("state without a mode registry");
  if (species_count_ == 0) throw CompatibilityError("species count must be positive");
  if (stats_ != Statistics::Distinguishable && species_count_ != 1) {
    throw CompatibilityError("identical particles carry exactly one species");
  }
  for (const auto& [occ, amp] : terms_) {
    if (occ.mode_count() != registry_->size() || occ.species_count() != species_count_) {
      throw CompatibilityError("occupation layout does not match the registry");
    }
    if (stats_ == Statistics::Fermion) {
      for (std::size_t m = 0; m < occ.mode_count(); ++m) {
        if (occ.count(m) > 1) throw std::logic_error("fermion term with double occupancy");
      }
    }
  }
}

Amplitude StateVector::amplitude(const OccupationState& occupation) const {
  auto it = terms_.find(occupation);
  return it == terms_.end() ? Amplitude{} : it->second;
}

std::optional<unsigned> StateVector::particle_number() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned n = terms_.begin()->first.total();
  for (const auto& [occ, amp] : terms_) {
    if (occ.total() != n) return std::nullopt;
  }
  return n;
}

bool StateVector::mixed_sector() const { return !terms_.empty() && !particle_number(); }

bool StateVector::compatible_with(const StateVector& other) const {
  return stats_ == other.stats_ && species_count_ == other.species_count_ &&
         (registry_ == other.registry_ || *registry_ == *other.registry_);
}

namespace {

void require_compatible(const StateVector& a, const StateVector& b) {
  if (!a.compatible_with(b)) {
    throw CompatibilityError("states differ in registry, statistics or species layout");
  }
}

}  // namespace

StateVector vacuum(RegistryPtr registry, Statistics stats) {
  return vacuum(std::move(registry), stats,
                stats == Statistics::Distinguishable ? kDistinguishableSpecies : 1);
}

StateVector vacuum(RegistryPtr registry, Statistics stats, std::size_t species_count) {
  if (!registry || registry->size() == 0) throw ModeError("vacuum needs a non-empty registry");
  OccupationState empty(registry->size(), species_count);
  return StateVector(std::move(registry), stats, species_count, {{empty, Amplitude{1.0, 0.0}}});
}

StateVector create(const StateVector& state, const ModeId& mode, std::size_t species) {
  return create(state, state.registry().index_of(mode), species);
}

StateVector create(const StateVector& state, std::size_t mode_index, std::size_t species) {
  if (mode_index >= state.registry().size()) {
    throw ModeError("mode index " + std::to_string(mode_index) + " is not registered");
  }
  if (species >= state.species_count()) {
    throw ModeError("species " + std::to_string(species) + " is not part of this state");
  }
  StateVector::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    const unsigned n = occ.count(mode_index, species);
    Amplitude factor;
    switch (state.statistics()) {
      case Statistics::Boson:
      case Statistics::Distinguishable:
        factor = std::sqrt(static_cast<double>(n + 1));
        break;
      case Statistics::Fermion: {
        if (n != 0) continue;  // Pauli exclusion
        unsigned preceding = 0;
        for (std::size_t m = 0; m < mode_index; ++m) preceding += occ.count(m);
        factor = (preceding % 2 == 0) ? 1.0 : -1.0;
        break;
      }
    }
    out[occ.with_count(mode_index, species, n + 1)] += amp * factor;
  }
  return StateVector(state.registry_ptr(), state.statistics(), state.species_count(),
                     std::move(out));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  require_compatible(a, b);
  Amplitude sum{};
  for (const auto& [occ, amp] : a.terms()) {
    auto it = b.terms().find(occ);
    if (it != b.terms().end()) sum += std::conj(amp) * it->second;
  }
  return sum;
}

double norm(const StateVector& state) {
  double sq = 0.0;
  for (const auto& [occ, amp] : state.terms()) sq += std::norm(amp);
  return std::sqrt(sq);
}

StateVector scale(const StateVector& state, Amplitude factor) {
  StateVector::Terms out = state.terms();
  for (auto& [occ, amp] : out) amp *= factor;
  return StateVector(state.registry_ptr(), state.statistics(), state.species_count(),
                     std::move(out));
}

StateVector add(const StateVector& a, const StateVector& b) {
  require_compatible(a, b);
  StateVector::Terms out = a.terms();
  for (const auto& [occ, amp] : b.terms()) out[occ] += amp;
  return StateVector(a.registry_ptr(), a.statistics(), a.species_count(), std::move(out));
}

StateVector prune(const StateVector& state, double tol) {
  StateVector::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    if (std::abs(amp) >= tol) out.emplace_hint(out.end(), occ, amp);
  }
  return StateVector(state.registry_ptr(), state.statistics(), state.species_count(),
                     std::move(out));
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  require_compatible(a, b);
  double worst = 0.0;
  for (const auto& [occ, amp] : a.terms()) worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
  for (const auto& [occ, amp] : b.terms()) {
    if (!a.terms().contains(occ)) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

}  // namespace exsim
