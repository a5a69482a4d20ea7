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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clqnn/common.hpp"
#include "clqnn/rng.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

/// Tensor product of Paulis, one code per qubit: 0=I, 1=X, 2=Y, 3=Z.
/// Text form lists qubit 0 first, e.g. "ZIX" is Z on qubit 0, X on qubit 2.
class PauliString {
  public:
    explicit PauliString(std::vector<std::uint8_t> codes);

    static PauliString parse(std::string_view text);
    static PauliString identity(std::size_t num_qubits);
    static PauliString single(std::size_t num_qubits, Qubit q, Axis axis);

    [[nodiscard]] std::size_t num_qubits() const { return codes_.size(); }
    [[nodiscard]] std::size_t locality() const;
    [[nodiscard]] std::uint8_t at(Qubit q) const { return codes_.at(q); }
    [[nodiscard]] const std::vector<std::uint8_t> &codes() const { return codes_; }
    [[nodiscard]] std::string to_string() const;

    /// Qubits flipped by the string (X or Y).
    [[nodiscard]] std::uint64_t x_mask() const;
    /// Qubits with a phase (Y or Z).
    [[nodiscard]] std::uint64_t z_mask() const;
    [[nodiscard]] unsigned y_count() const;
    /// Qubits carrying a non-identity factor.
    [[nodiscard]] std::uint64_t support_mask() const;

    auto operator<=>(const PauliString &) const = default;

  private:
    std::vector<std::uint8_t> codes_;
};

/// Every non-identity factor replaced by Z.
PauliString three_bar(const PauliString &p);
/// Y factors replaced by Z; everything else kept.
PauliString three_bar_two(const PauliString &p);

struct HamiltonianTerm {
    double coeff;
    PauliString pauli;
};

/// Real combination of Pauli strings. Repeated strings are merged on insertion,
/// keeping the position of the first occurrence.
class Hamiltonian {
  public:
    explicit Hamiltonian(std::size_t num_qubits);
    Hamiltonian(std::size_t num_qubits, const std::vector<HamiltonianTerm> &terms);

    void add_term(double coeff, const PauliString &p);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] const std::vector<HamiltonianTerm> &terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

  private:
    std::size_t num_qubits_;
    std::vector<HamiltonianTerm> terms_;
};

/// Periodic transverse-field Ising model
/// H = -(1/N) Σ Z_i Z_{i+1} - (1/N) Σ X_i, indices mod N.
Hamiltonian ising_hamiltonian(std::size_t num_qubits);

/// Basis change applied before a Z-basis readout of the given Pauli axis.
/// X: Hadamard. Y: H·S† = (1/√2)[[1, -i], [1, i]], which maps |±i> to |0>/|1>.
/// Z: identity.
SingleQubitUnitary measurement_basis_change(Axis axis);

/// <ψ|P|ψ>
double expectation_exact(const PureState &state, const PauliString &p);

/// Finite-shot estimate: rotate the support into the Z basis, draw `shots`
/// bitstrings from |ψ'|², average the ±1 eigenvalue products.
double expectation_shots(const PureState &state, const PauliString &p,
                         std::uint64_t shots, Rng &rng);

/// Same distribution as `expectation_shots` given the exact expectation:
/// each shot is a ±1 outcome with P(+1) = (1 + exact) / 2.
double sample_pauli_estimate(double exact, std::uint64_t shots, Rng &rng);

/// Weighted sum of per-term expectations; with `shots`, every term is sampled
/// independently with that many shots.
double expectation_hamiltonian(const PureState &state, const Hamiltonian &h,
                               std::optional<std::uint64_t> shots = std::nullopt,
                               Rng *rng = nullptr);

} // namespace clqnn
