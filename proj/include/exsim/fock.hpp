// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Modes, occupation-number basis states and sparse state vectors.
 *
 * A StateVector is a sparse map from OccupationState to complex amplitude.
 * States are values: every operation returns a new state and never mutates
 * its inputs, so states can be shared freely between threads.
 *
 * Fermion sign convention: the basis state with occupied modes m1 < m2 < ...
 * (canonical registry order) is a†_{m1} a†_{m2} ... |0⟩. Creating on mode m
 * therefore picks up (-1)^(number of occupied modes preceding m).
 */

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exsim/statistics.hpp"

namespace exsim {

using Amplitude = std::complex<double>;

inline constexpr double kPruneTolerance = 1e-12;
inline constexpr double kCompareTolerance = 1e-9;

/// Number of species tags carried by Distinguishable states (one per source).
inline constexpr std::size_t kDistinguishableSpecies = 2;

/// A mode used by a state or circuit is not registered, or is used in a way
/// the registry layout does not allow.
class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two states (or a state and a circuit) disagree on registry, statistics or
/// species layout.
class CompatibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ModeId {
  std::string label;

  auto operator<=>(const ModeId&) const = default;
};

/// Ordered, immutable set of modes. Declaration order is the canonical order
/// that fixes every fermion sign.
class ModeRegistry {
 public:
  explicit ModeRegistry(std::vector<ModeId> modes);

  std::size_t size() const { return modes_.size(); }
  std::span<const ModeId> modes() const { return modes_; }
  const ModeId& at(std::size_t index) const { return modes_.at(index); }

  bool contains(const ModeId& mode) const { return index_.contains(mode.label); }
  std::optional<std::size_t> find(const ModeId& mode) const;
  /// Throws ModeError for an unregistered mode.
  std::size_t index_of(const ModeId& mode) const;

  bool operator==(const ModeRegistry& other) const { return modes_ == other.modes_; }

 private:
  std::vector<ModeId> modes_;
  std::map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

RegistryPtr make_registry(std::vector<ModeId> modes);

/// Occupation counts per (mode, species) slot. Identical-particle states use
/// a single species.
class OccupationState {
 public:
  OccupationState(std::size_t mode_count, std::size_t species_count);

  std::size_t mode_count() const { return mode_count_; }
  std::size_t species_count() const { return species_count_; }

  unsigned count(std::size_t mode, std::size_t species = 0) const {
    return counts_[slot(mode, species)];
  }
  /// Count on `mode` summed over species.
  unsigned mode_total(std::size_t mode) const;
  unsigned total() const;

  OccupationState with_count(std::size_t mode, std::size_t species, unsigned count) const;

  auto operator<=>(const OccupationState&) const = default;

 private:
  std::size_t slot(std::size_t mode, std::size_t species) const {
    return mode * species_count_ + species;
  }

  std::size_t mode_count_;
  std::size_t species_count_;
  std::vector<std::uint8_t> counts_;
};

class StateVector {
 public:
  using Terms = std::map<OccupationState, Amplitude>;

  /// Throws CompatibilityError if a term's layout does not match, and
  /// std::logic_error if a fermion term has any count above one.
  StateVector(RegistryPtr registry, Statistics stats, std::size_t species_count, Terms terms);

  const ModeRegistry& registry() const { return *registry_; }
  const RegistryPtr& registry_ptr() const { return registry_; }
  Statistics statistics() const { return stats_; }
  std::size_t species_count() const { return species_count_; }
  const Terms& terms() const { return terms_; }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Amplitude amplitude(const OccupationState& occupation) const;

  /// Shared particle number of all terms; empty for the zero state and for a
  /// mixed-sector state.
  std::optional<unsigned> particle_number() const;
  bool mixed_sector() const;

  /// Same registry contents, statistics and species layout.
  bool compatible_with(const StateVector& other) const;

 private:
  RegistryPtr registry_;
  Statistics stats_;
  std::size_t species_count_;
  Terms terms_;
};

StateVector vacuum(RegistryPtr registry, Statistics stats);
StateVector vacuum(RegistryPtr registry, Statistics stats, std::size_t species_count);

/// Applies a† on `mode`. `species` selects the ladder for Distinguishable
/// states and must be zero otherwise.
StateVector create(const StateVector& state, const ModeId& mode, std::size_t species = 0);
StateVector create(const StateVector& state, std::size_t mode_index, std::size_t species = 0);

/// Conjugate-linear in `a`.
Amplitude inner_product(const StateVector& a, const StateVector& b);
double norm(const StateVector& state);
StateVector scale(const StateVector& state, Amplitude factor);
StateVector add(const StateVector& a, const StateVector& b);
/// Drops every term with |amplitude| < tol.
StateVector prune(const StateVector& state, double tol = kPruneTolerance);

/// Largest amplitude difference over the union of supports.
double max_abs_difference(const StateVector& a, const StateVector& b);

}  // namespace exsim
