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

#include "clqnn/noise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace clqnn {

namespace {

void check_width(std::size_t n) {
    if (n < 1 || n > kMaxMixedQubits) {
        throw ValidationError("density-matrix width must be in [1, " +
                              std::to_string(kMaxMixedQubits) + "], got " +
                              std::to_string(n));
    }
}

void check_noise(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ValidationError("depolarizing parameter must lie in [0, 1]");
    }
}

kernels::Mat2 conj_of(const kernels::Mat2 &m) {
    return {std::conj(m.m00), std::conj(m.m01), std::conj(m.m10), std::conj(m.m11)};
}

} // namespace

MixedState::MixedState(std::size_t num_qubits, std::vector<Complex> data)
    : num_qubits_(num_qubits), data_(std::move(data)) {}

MixedState::MixedState(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    data_.assign(std::size_t{1} << (2 * num_qubits), Complex(0, 0));
    data_[0] = 1.0;
}

MixedState MixedState::from_pure(const PureState &psi) {
    const std::size_t n = psi.num_qubits();
    check_width(n);
    const std::size_t d = psi.dim();
    const auto a = psi.amplitudes();
    std::vector<Complex> data(d * d);
    for (std::size_t c = 0; c < d; ++c) {
        const Complex cc = std::conj(a[c]);
        for (std::size_t r = 0; r < d; ++r) {
            data[r + c * d] = a[r] * cc;
        }
    }
    return {n, std::move(data)};
}

MixedState MixedState::from_matrix(std::size_t num_qubits, std::span<const Complex> rows) {
    check_width(num_qubits);
    const std::size_t d = std::size_t{1} << num_qubits;
    if (rows.size() != d * d) {
        throw DimensionMismatch("density matrix needs " + std::to_string(d * d) +
                                " entries, got " + std::to_string(rows.size()));
    }
    std::vector<Complex> data(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            data[r + c * d] = rows[r * d + c];
        }
    }
    return {num_qubits, std::move(data)};
}

MixedState MixedState::maximally_mixed(std::size_t num_qubits) {
    MixedState rho(num_qubits);
    const std::size_t d = rho.dim();
    rho.data_[0] = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        rho.data_[k + k * d] = 1.0 / static_cast<double>(d);
    }
    return rho;
}

Complex MixedState::trace() const {
    Complex t = 0;
    const std::size_t d = dim();
    for (std::size_t k = 0; k < d; ++k) {
        t += data_[k + k * d];
    }
    return t;
}

double MixedState::hermiticity_error() const {
    double worst = 0.0;
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

void MixedState::apply_matrix(const kernels::Mat2 &m, Qubit target) {
    check_qubit(target, num_qubits_);
    const auto &k = kernels::active_kernels();
    k.apply_1q(data_.data(), 2 * num_qubits_, target, m);
    k.apply_1q(data_.data(), 2 * num_qubits_, target + num_qubits_, conj_of(m));
}

void MixedState::apply_rotation(Axis axis, double theta, Qubit target) {
    apply_matrix(rotation_matrix(axis, theta), target);
}

void MixedState::apply_cz(Qubit a, Qubit b) {
    check_qubit(a, num_qubits_);
    check_qubit(b, num_qubits_);
    if (a == b) {
        throw InvalidGateError("CZ needs two distinct qubits");
    }
    const auto &k = kernels::active_kernels();
    k.apply_cz(data_.data(), 2 * num_qubits_, a, b);
    k.apply_cz(data_.data(), 2 * num_qubits_, a + num_qubits_, b + num_qubits_);
}

void MixedState::apply_cnot(Qubit control, Qubit target) {
    check_qubit(control, num_qubits_);
    check_qubit(target, num_qubits_);
    if (control == target) {
        throw InvalidGateError("CNOT needs distinct control and target");
    }
    const auto &k = kernels::active_kernels();
    k.apply_cnot(data_.data(), 2 * num_qubits_, control, target);
    k.apply_cnot(data_.data(), 2 * num_qubits_, control + num_qubits_,
                 target + num_qubits_);
}

void MixedState::depolarize(double q, Qubit target) {
    check_noise(q);
    check_qubit(target, num_qubits_);
    kernels::active_kernels().depolarize(data_.data(), 2 * num_qubits_, target,
                                         target + num_qubits_, q);
}

MixedState depolarize_qubit(MixedState rho, double q, Qubit target) {
    rho.depolarize(q, target);
    return rho;
}

MixedState run_noisy(const ParamCircuit &c, std::span<const double> theta, double q,
                     const MixedState &input) {
    check_parameters(c, theta);
    check_noise(q);
    if (input.num_qubits() != c.num_qubits()) {
        throw DimensionMismatch("state width does not match circuit");
    }
    MixedState rho = input;
    const auto &marks = c.layer_marks();
    std::size_t next_mark = 0;
    auto noise_layer = [&] {
        for (Qubit t = 0; t < rho.num_qubits(); ++t) {
            rho.depolarize(q, t);
        }
    };
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        const GateOp &op = c.ops()[i];
        if (const auto *r = std::get_if<RotationOp>(&op)) {
            rho.apply_rotation(r->axis, rotation_angle(*r, theta), r->qubit);
        } else if (const auto *z = std::get_if<CzOp>(&op)) {
            rho.apply_cz(z->a, z->b);
        } else {
            const auto &x = std::get<CnotOp>(op);
            rho.apply_cnot(x.control, x.target);
        }
        while (next_mark < marks.size() && marks[next_mark] == i + 1) {
            noise_layer();
            ++next_mark;
        }
    }
    return rho;
}

double expectation_mixed(const MixedState &rho, const PauliString &p) {
    if (p.num_qubits() != rho.num_qubits()) {
        throw DimensionMismatch("Pauli string width does not match state");
    }
    // Tr[P rho] = Σ_k i^ny (-1)^popcount(k & z) rho(k, k ^ x)
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    Complex acc = 0;
    for (std::size_t k = 0; k < rho.dim(); ++k) {
        const Complex v = rho.at(k, k ^ x);
        acc += (std::popcount(k & z) & 1) != 0 ? -v : v;
    }
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return (kPhase[p.y_count() % 4] * acc).real();
}

} // namespace clqnn
