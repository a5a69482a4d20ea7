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

#include "clqnn/state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace clqnn {

using kernels::Mat2;

char axis_name(Axis axis) {
    switch (axis) {
    case Axis::X:
        return 'X';
    case Axis::Y:
        return 'Y';
    case Axis::Z:
        return 'Z';
    }
    return '?';
}

Axis parse_axis(char c) {
    switch (c) {
    case 'X':
    case 'x':
        return Axis::X;
    case 'Y':
    case 'y':
        return Axis::Y;
    case 'Z':
    case 'z':
        return Axis::Z;
    default:
        throw ValidationError(std::string("unknown rotation axis '") + c + "'");
    }
}

Mat2 rotation_matrix(Axis axis, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    switch (axis) {
    case Axis::X:
        return {Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
    case Axis::Y:
        return {Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0)};
    case Axis::Z:
        return {Complex(c, -s), Complex(0, 0), Complex(0, 0), Complex(c, s)};
    }
    return {};
}

Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

namespace {

Mat2 adjoint_of(const Mat2 &m) {
    return {std::conj(m.m00), std::conj(m.m10), std::conj(m.m01),
            std::conj(m.m11)};
}

bool is_unitary(const Mat2 &m, double tol) {
    const Mat2 p = matmul(m, adjoint_of(m));
    return std::abs(p.m00 - 1.0) <= tol && std::abs(p.m11 - 1.0) <= tol &&
           std::abs(p.m01) <= tol && std::abs(p.m10) <= tol;
}

} // namespace

SingleQubitUnitary::SingleQubitUnitary(const Mat2 &m) : m_(m) {
    if (!is_unitary(m, kTolerance)) {
        throw ValidationError("matrix is not unitary within 1e-12");
    }
}

SingleQubitUnitary SingleQubitUnitary::rotation(Axis axis, double theta) {
    return {rotation_matrix(axis, theta), Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::pauli(Axis axis) {
    switch (axis) {
    case Axis::X:
        return {Mat2{0, 1, 1, 0}, Unchecked{}};
    case Axis::Y:
        return {Mat2{0, Complex(0, -1), Complex(0, 1), 0}, Unchecked{}};
    case Axis::Z:
        return {Mat2{1, 0, 0, -1}, Unchecked{}};
    }
    return identity();
}

SingleQubitUnitary SingleQubitUnitary::hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {Mat2{h, h, h, -h}, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::identity() {
    return {Mat2{1, 0, 0, 1}, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
    return {adjoint_of(m_), Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::conjugate() const {
    return {Mat2{std::conj(m_.m00), std::conj(m_.m01), std::conj(m_.m10),
                 std::conj(m_.m11)},
            Unchecked{}};
}

SingleQubitUnitary
SingleQubitUnitary::operator*(const SingleQubitUnitary &rhs) const {
    return {matmul(m_, rhs.m_), Unchecked{}};
}

PureState::PureState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxPureQubits) {
        throw ValidationError("pure state supports 1.." +
                              std::to_string(kMaxPureQubits) + " qubits, got " +
                              std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex(0.0, 0.0));
    amps_[0] = 1.0;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionMismatch("amplitude count must be a power of two >= 2");
    }
    PureState state(static_cast<std::size_t>(std::countr_zero(dim)));
    state.amps_ = std::move(amplitudes);
    return state;
}

PureState PureState::basis(std::size_t num_qubits, std::size_t index) {
    PureState state(num_qubits);
    if (index >= state.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    state.amps_[0] = 0.0;
    state.amps_[index] = 1.0;
    return state;
}

double PureState::norm_sq() const {
    double s = 0.0;
    for (const Complex &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void PureState::apply_rotation(Axis axis, double theta, Qubit target) {
    apply_matrix(rotation_matrix(axis, theta), target);
}

void PureState::apply_unitary(const SingleQubitUnitary &u, Qubit target) {
    apply_matrix(u.matrix(), target);
}

void PureState::apply_matrix(const Mat2 &m, Qubit target) {
    check_qubit(target, num_qubits_);
    kernels::active_kernels().apply_1q(amps_.data(), num_qubits_, target, m);
}

void PureState::apply_cz(Qubit a, Qubit b) {
    check_qubit(a, num_qubits_);
    check_qubit(b, num_qubits_);
    if (a == b) {
        throw InvalidGateError("CZ endpoints must differ");
    }
    kernels::active_kernels().apply_cz(amps_.data(), num_qubits_, a, b);
}

void PureState::apply_cnot(Qubit control, Qubit target) {
    check_qubit(control, num_qubits_);
    check_qubit(target, num_qubits_);
    if (control == target) {
        throw InvalidGateError("CNOT control and target must differ");
    }
    kernels::active_kernels().apply_cnot(amps_.data(), num_qubits_, control,
                                         target);
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("inner product of states with different sizes");
    }
    Complex s(0.0, 0.0);
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) {
        s += std::conj(x[k]) * y[k];
    }
    return s;
}

} // namespace clqnn
