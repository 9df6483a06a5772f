// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file mode_algebra.hpp
 * @brief Passive linear mode transformations applied to Fock states.
 *
 * A ModeUnitary U maps a list of input modes onto a list of output modes.
 * It acts on states by substituting every creation operator on input mode j
 *
 *     a†_j  ->  Σ_k U(k, j) b†_k
 *
 * and re-expanding the product of creation operators on the vacuum. Modes
 * that are not inputs of U are left in place. Inputs and outputs may be the
 * same list (a genuine in-place unitary) or disjoint lists (a beam splitter
 * feeding fresh output paths).
 */

#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "exsim/fock.hpp"

namespace exsim {

inline constexpr double kUnitarityTolerance = 1e-12;

class NonUnitaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square complex matrix, row = output mode, column = input mode.
class ModeUnitary {
 public:
  /// Acts in place on `modes`.
  ModeUnitary(std::vector<ModeId> modes, Eigen::MatrixXcd matrix);
  ModeUnitary(std::vector<ModeId> inputs, std::vector<ModeId> outputs, Eigen::MatrixXcd matrix);

  const std::vector<ModeId>& inputs() const { return inputs_; }
  const std::vector<ModeId>& outputs() const { return outputs_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  std::vector<ModeId> inputs_;
  std::vector<ModeId> outputs_;
  Eigen::MatrixXcd matrix_;
};

/// Max-entry deviation of U·U† from the identity.
double unitarity_defect(const Eigen::MatrixXcd& matrix);

/// PlusMinus: top -> (top + bottom)/√2, bottom -> (top - bottom)/√2.
/// MinusFirst: top -> (top - bottom)/√2, bottom -> (top + bottom)/√2.
enum class BeamSplitterConvention { PlusMinus, MinusFirst };

Eigen::Matrix2cd beam_splitter_matrix(BeamSplitterConvention convention);

struct PhaseShift {
  ModeId mode;
  double phi;
};

struct BeamSplitter {
  ModeId in_top;
  ModeId in_bottom;
  ModeId out_top;
  ModeId out_bottom;
  BeamSplitterConvention convention;

  ModeUnitary unitary() const;
};

struct Custom {
  ModeUnitary unitary;
};

using CircuitElement = std::variant<PhaseShift, BeamSplitter, Custom>;

/// Elements are applied in list order. Construction checks that every mode
/// an element references is registered.
class Circuit {
 public:
  Circuit(RegistryPtr registry, std::vector<CircuitElement> elements);

  const ModeRegistry& registry() const { return *registry_; }
  const RegistryPtr& registry_ptr() const { return registry_; }
  const std::vector<CircuitElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  RegistryPtr registry_;
  std::vector<CircuitElement> elements_;
};

/// Multiplies each term by e^{i·phi·n}, n the count on `mode`.
StateVector phase_shift(const StateVector& state, const ModeId& mode, double phi);

/// Throws ModeError if a mode of `u` is unregistered or if the state holds
/// particles on an output mode that is not also an input.
StateVector apply_mode_unitary(const StateVector& state, const ModeUnitary& u,
                               double prune_tol = kPruneTolerance);

StateVector apply_element(const StateVector& state, const CircuitElement& element,
                          double prune_tol = kPruneTolerance);

StateVector run_circuit(const Circuit& circuit, const StateVector& state,
                        double prune_tol = kPruneTolerance);

}  // namespace exsim
