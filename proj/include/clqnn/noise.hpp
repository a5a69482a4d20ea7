// Copyright 2026 The clqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clqnn/circuit.hpp"
#include "clqnn/common.hpp"
#include "clqnn/kernels/kernels.hpp"
#include "clqnn/pauli.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

/// Density matrix over N qubits. Stored as a vector of 4^N entries with
/// rho(r, c) at index r + 2^N c, so a gate U on qubit q acts as U on bit q and
/// conj(U) on bit N + q of a 2N-qubit vector.
class MixedState {
  public:
    /// |0...0><0...0|
    explicit MixedState(std::size_t num_qubits);

    static MixedState from_pure(const PureState &psi);
    /// Row-major 2^N x 2^N matrix. Not checked for positivity.
    static MixedState from_matrix(std::size_t num_qubits, std::span<const Complex> rows);
    static MixedState maximally_mixed(std::size_t num_qubits);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << num_qubits_; }
    [[nodiscard]] Complex at(std::size_t row, std::size_t col) const {
        return data_[row + (col << num_qubits_)];
    }
    [[nodiscard]] std::span<const Complex> data() const { return data_; }
    [[nodiscard]] Complex trace() const;
    /// max |rho - rho†|
    [[nodiscard]] double hermiticity_error() const;

    void apply_matrix(const kernels::Mat2 &m, Qubit target);
    void apply_rotation(Axis axis, double theta, Qubit target);
    void apply_cz(Qubit a, Qubit b);
    void apply_cnot(Qubit control, Qubit target);
    /// In-place form of depolarize_qubit.
    void depolarize(double q, Qubit target);

  private:
    MixedState(std::size_t num_qubits, std::vector<Complex> data);

    std::size_t num_qubits_;
    std::vector<Complex> data_;
};

/// N_q(rho) = q rho + (1 - q)/2 I ⊗ Tr_target(rho) on one qubit. Throws
/// ValidationError unless 0 <= q <= 1.
MixedState depolarize_qubit(MixedState rho, double q, Qubit target);

/// Runs the circuit on a density matrix and applies N_q to every qubit at each
/// layer mark.
MixedState run_noisy(const ParamCircuit &c, std::span<const double> theta, double q,
                     const MixedState &input);

/// Tr[P rho]
double expectation_mixed(const MixedState &rho, const PauliString &p);

} // namespace clqnn
