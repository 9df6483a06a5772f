// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "exsim/mode_algebra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <utility>

namespace exsim {

namespace {

void require_distinct(const std::vector<ModeId>& modes, const char* what) {
  std::set<ModeId> seen(modes.begin(), modes.end());
  if (seen.size() != modes.size()) {
    throw ModeError(std::string("duplicate mode in unitary ") + what);
  }
}

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

StateVector single_term(const StateVector& like, OccupationState occ, Amplitude amp) {
  return StateVector(like.registry_ptr(), like.statistics(), like.species_count(),
                     {{std::move(occ), amp}});
}

}  // namespace

ModeUnitary::ModeUnitary(std::vector<ModeId> modes, Eigen::MatrixXcd matrix)
    : ModeUnitary(modes, modes, std::move(matrix)) {}

ModeUnitary::ModeUnitary(std::vector<ModeId> inputs, std::vector<ModeId> outputs,
                         Eigen::MatrixXcd matrix)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), matrix_(std::move(matrix)) {
  if (inputs_.empty() || inputs_.size() != outputs_.size()) {
    throw ModeError("unitary needs equally many, and at least one, input and output modes");
  }
  require_distinct(inputs_, "inputs");
  require_distinct(outputs_, "outputs");
  const auto n = static_cast<Eigen::Index>(inputs_.size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw NonUnitaryError("matrix shape does not match the mode lists");
  }
  if (unitarity_defect(matrix_) > kUnitarityTolerance) {
    throw NonUnitaryError("matrix is not unitary within tolerance");
  }
}

double unitarity_defect(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd defect =
      matrix * matrix.adjoint() - Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols());
  return defect.cwiseAbs().maxCoeff();
}

Eigen::Matrix2cd beam_splitter_matrix(BeamSplitterConvention convention) {
  const double h = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  switch (convention) {
    case BeamSplitterConvention::PlusMinus:
      m << h, h,
           h, -h;
      break;
    case BeamSplitterConvention::MinusFirst:
      m << h, h,
           -h, h;
      break;
  }
  return m;
}

ModeUnitary BeamSplitter::unitary() const {
  return ModeUnitary({in_top, in_bottom}, {out_top, out_bottom}, beam_splitter_matrix(convention));
}

Circuit::Circuit(RegistryPtr registry, std::vector<CircuitElement> elements)
    : registry_(std::move(registry)), elements_(std::move(elements)) {
  if (!registry_) throw ModeError("circuit without a mode registry");
  auto check = [&](const ModeId& m) { registry_->index_of(m); };
  for (const CircuitElement& element : elements_) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, PhaseShift>) {
            check(e.mode);
            if (!std::isfinite(e.phi)) throw std::invalid_argument("phase must be finite");
          } else if constexpr (std::is_same_v<T, BeamSplitter>) {
            check(e.in_top);
            check(e.in_bottom);
            check(e.out_top);
            check(e.out_bottom);
          } else {
            for (const ModeId& m : e.unitary.inputs()) check(m);
            for (const ModeId& m : e.unitary.outputs()) check(m);
          }
        },
        element);
  }
}

StateVector phase_shift(const StateVector& state, const ModeId& mode, double phi) {
  const std::size_t index = state.registry().index_of(mode);
  StateVector::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    out.emplace_hint(out.end(), occ, amp * std::polar(1.0, phi * occ.mode_total(index)));
  }
  return StateVector(state.registry_ptr(), state.statistics(), state.species_count(),
                     std::move(out));
}

StateVector apply_mode_unitary(const StateVector& state, const ModeUnitary& u, double prune_tol) {
  const ModeRegistry& registry = state.registry();
  const std::size_t modes = registry.size();
  const std::size_t species = state.species_count();

  // input_column[m] = column of U for registry mode m, or -1 if m is untouched.
  std::vector<Eigen::Index> input_column(modes, -1);
  std::vector<std::size_t> output_index;
  for (std::size_t j = 0; j < u.inputs().size(); ++j) {
    input_column[registry.index_of(u.inputs()[j])] = static_cast<Eigen::Index>(j);
  }
  for (const ModeId& m : u.outputs()) output_index.push_back(registry.index_of(m));

  for (std::size_t k : output_index) {
    if (input_column[k] >= 0) continue;
    for (const auto& [occ, amp] : state.terms()) {
      if (occ.mode_total(k) != 0) {
        throw ModeError("state occupies output mode '" + registry.at(k).label +
                        "' which is not an input of the unitary");
      }
    }
  }

  const OccupationState empty(modes, species);
  StateVector result(state.registry_ptr(), state.statistics(), species, {});
  for (const auto& [occ, amp] : state.terms()) {
    // The basis term is Π (a†_{m,s})^{n} / sqrt(n!) |0⟩ in canonical order.
    std::vector<std::pair<std::size_t, std::size_t>> ops;
    double weight = 1.0;
    for (std::size_t m = 0; m < modes; ++m) {
      for (std::size_t s = 0; s < species; ++s) {
        const unsigned n = occ.count(m, s);
        for (unsigned r = 0; r < n; ++r) ops.emplace_back(m, s);
        if (state.statistics() != Statistics::Fermion) weight *= factorial(n);
      }
    }

    StateVector partial = single_term(state, empty, amp / std::sqrt(weight));
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const auto [m, s] = *it;
      const Eigen::Index j = input_column[m];
      if (j < 0) {
        partial = create(partial, m, s);
        continue;
      }
      StateVector next(state.registry_ptr(), state.statistics(), species, {});
      for (std::size_t k = 0; k < output_index.size(); ++k) {
        const Amplitude coeff = u.matrix()(static_cast<Eigen::Index>(k), j);
        if (coeff == Amplitude{}) continue;
        next = add(next, scale(create(partial, output_index[k], s), coeff));
      }
      partial = std::move(next);
    }
    result = add(result, partial);
  }
  return prune(result, prune_tol);
}

StateVector apply_element(const StateVector& state, const CircuitElement& element,
                          double prune_tol) {
  return std::visit(
      [&](const auto& e) -> StateVector {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, PhaseShift>) {
          return phase_shift(state, e.mode, e.phi);
        } else if constexpr (std::is_same_v<T, BeamSplitter>) {
          return apply_mode_unitary(state, e.unitary(), prune_tol);
        } else {
          return apply_mode_unitary(state, e.unitary, prune_tol);
        }
      },
      element);
}

StateVector run_circuit(const Circuit& circuit, const StateVector& state, double prune_tol) {
  if (!(state.registry_ptr() == circuit.registry_ptr() ||
        state.registry() == circuit.registry())) {
    throw CompatibilityError("state and circuit use different mode registries");
  }
  StateVector current = state;
  for (const CircuitElement& element : circuit.elements()) {
    current = apply_element(current, element, prune_tol);
  }
  return current;
}

}  // namespace exsim
