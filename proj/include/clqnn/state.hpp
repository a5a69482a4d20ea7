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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "clqnn/common.hpp"
#include "clqnn/kernels/kernels.hpp"

namespace clqnn {

/// 2x2 unitary, checked at construction (U U† = I within 1e-12).
class SingleQubitUnitary {
  public:
    static constexpr double kTolerance = 1e-12;

    /// Throws ValidationError when `m` is not unitary.
    explicit SingleQubitUnitary(const kernels::Mat2 &m);

    /// e^{-i θ G} = I cos θ - i G sin θ for G the Pauli of `axis`.
    static SingleQubitUnitary rotation(Axis axis, double theta);
    static SingleQubitUnitary pauli(Axis axis);
    static SingleQubitUnitary hadamard();
    static SingleQubitUnitary identity();

    [[nodiscard]] const kernels::Mat2 &matrix() const { return m_; }
    [[nodiscard]] SingleQubitUnitary adjoint() const;
    [[nodiscard]] SingleQubitUnitary conjugate() const;

    /// this * rhs
    [[nodiscard]] SingleQubitUnitary operator*(const SingleQubitUnitary &rhs) const;

  private:
    struct Unchecked {};
    SingleQubitUnitary(const kernels::Mat2 &m, Unchecked) : m_(m) {}

    kernels::Mat2 m_;
};

/// Rotation matrix e^{-i θ G}, without the unitarity check.
kernels::Mat2 rotation_matrix(Axis axis, double theta);
kernels::Mat2 matmul(const kernels::Mat2 &a, const kernels::Mat2 &b);

/// Dense pure state over 2^N amplitudes, qubit 0 = least significant bit.
class PureState {
  public:
    /// |0...0>
    explicit PureState(std::size_t num_qubits);

    /// Takes ownership of explicit amplitudes; length must be a power of two.
    static PureState from_amplitudes(std::vector<Complex> amplitudes);
    /// Computational basis state |index>.
    static PureState basis(std::size_t num_qubits, std::size_t index);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() { return amps_; }
    [[nodiscard]] double norm_sq() const;

    void apply_rotation(Axis axis, double theta, Qubit target);
    void apply_unitary(const SingleQubitUnitary &u, Qubit target);
    /// Applies a raw 2x2 matrix without the unitarity check.
    void apply_matrix(const kernels::Mat2 &m, Qubit target);
    /// Throws InvalidGateError when a == b.
    void apply_cz(Qubit a, Qubit b);
    /// Throws InvalidGateError when control == target.
    void apply_cnot(Qubit control, Qubit target);

  private:
    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

/// <a|b>
Complex inner_product(const PureState &a, const PureState &b);

} // namespace clqnn
