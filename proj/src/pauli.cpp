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

#include "clqnn/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

namespace clqnn {

PauliString::PauliString(std::vector<std::uint8_t> codes)
    : codes_(std::move(codes)) {
    if (codes_.empty()) {
        throw ValidationError("Pauli string needs at least one qubit");
    }
    if (codes_.size() > 64) {
        throw ValidationError("Pauli string longer than 64 qubits");
    }
    for (std::uint8_t c : codes_) {
        if (c > 3) {
            throw ValidationError("Pauli code must be in 0..3");
        }
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<std::uint8_t> codes;
    codes.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I':
        case 'i':
            codes.push_back(0);
            break;
        case 'X':
        case 'x':
            codes.push_back(1);
            break;
        case 'Y':
        case 'y':
            codes.push_back(2);
            break;
        case 'Z':
        case 'z':
            codes.push_back(3);
            break;
        default:
            throw ValidationError(std::string("invalid Pauli character '") + c +
                                  "'");
        }
    }
    return PauliString(std::move(codes));
}

PauliString PauliString::identity(std::size_t num_qubits) {
    return PauliString(std::vector<std::uint8_t>(num_qubits, 0));
}

PauliString PauliString::single(std::size_t num_qubits, Qubit q, Axis axis) {
    check_qubit(q, num_qubits);
    std::vector<std::uint8_t> codes(num_qubits, 0);
    codes[q] = static_cast<std::uint8_t>(axis);
    return PauliString(std::move(codes));
}

std::size_t PauliString::locality() const {
    return static_cast<std::size_t>(
        std::count_if(codes_.begin(), codes_.end(), [](auto c) { return c != 0; }));
}

std::string PauliString::to_string() const {
    static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
    std::string out;
    out.reserve(codes_.size());
    for (std::uint8_t c : codes_) {
        out.push_back(kNames[c]);
    }
    return out;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < codes_.size(); ++q) {
        if (codes_[q] == 1 || codes_[q] == 2) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < codes_.size(); ++q) {
        if (codes_[q] == 2 || codes_[q] == 3) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

unsigned PauliString::y_count() const {
    return static_cast<unsigned>(
        std::count(codes_.begin(), codes_.end(), std::uint8_t{2}));
}

std::uint64_t PauliString::support_mask() const { return x_mask() | z_mask(); }

PauliString three_bar(const PauliString &p) {
    std::vector<std::uint8_t> codes = p.codes();
    for (auto &c : codes) {
        if (c != 0) {
            c = 3;
        }
    }
    return PauliString(std::move(codes));
}

PauliString three_bar_two(const PauliString &p) {
    std::vector<std::uint8_t> codes = p.codes();
    for (auto &c : codes) {
        if (c == 2) {
            c = 3;
        }
    }
    return PauliString(std::move(codes));
}

Hamiltonian::Hamiltonian(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw ValidationError("Hamiltonian needs at least one qubit");
    }
}

Hamiltonian::Hamiltonian(std::size_t num_qubits,
                         const std::vector<HamiltonianTerm> &terms)
    : Hamiltonian(num_qubits) {
    for (const auto &t : terms) {
        add_term(t.coeff, t.pauli);
    }
}

void Hamiltonian::add_term(double coeff, const PauliString &p) {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionMismatch("Hamiltonian term has " +
                                std::to_string(p.num_qubits()) +
                                " qubits, expected " +
                                std::to_string(num_qubits_));
    }
    if (!std::isfinite(coeff)) {
        throw ValidationError("Hamiltonian coefficient must be finite");
    }
    for (auto &t : terms_) {
        if (t.pauli == p) {
            t.coeff += coeff;
            return;
        }
    }
    terms_.push_back({coeff, p});
}

Hamiltonian ising_hamiltonian(std::size_t num_qubits) {
    if (num_qubits < 2) {
        throw ValidationError("Ising ring needs at least 2 qubits");
    }
    const double c = -1.0 / static_cast<double>(num_qubits);
    Hamiltonian h(num_qubits);
    for (std::size_t i = 0; i < num_qubits; ++i) {
        std::vector<std::uint8_t> codes(num_qubits, 0);
        codes[i] = 3;
        codes[(i + 1) % num_qubits] = 3;
        h.add_term(c, PauliString(std::move(codes)));
    }
    for (std::size_t i = 0; i < num_qubits; ++i) {
        h.add_term(c, PauliString::single(num_qubits, i, Axis::X));
    }
    return h;
}

SingleQubitUnitary measurement_basis_change(Axis axis) {
    const double h = std::numbers::sqrt2 / 2.0;
    switch (axis) {
    case Axis::X:
        return SingleQubitUnitary::hadamard();
    case Axis::Y:
        return SingleQubitUnitary(
            kernels::Mat2{Complex(h, 0), Complex(0, -h), Complex(h, 0),
                          Complex(0, h)});
    case Axis::Z:
        break;
    }
    return SingleQubitUnitary::identity();
}

namespace {

void check_dims(const PureState &state, const PauliString &p) {
    if (state.num_qubits() != p.num_qubits()) {
        throw DimensionMismatch("observable acts on " +
                                std::to_string(p.num_qubits()) +
                                " qubits, state has " +
                                std::to_string(state.num_qubits()));
    }
}

} // namespace

double expectation_exact(const PureState &state, const PauliString &p) {
    check_dims(state, p);
    return kernels::active_kernels().pauli_expectation(
        state.amplitudes().data(), state.num_qubits(), p.x_mask(), p.z_mask(),
        p.y_count());
}

double expectation_shots(const PureState &state, const PauliString &p,
                         std::uint64_t shots, Rng &rng) {
    check_dims(state, p);
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    PureState rotated = state;
    for (Qubit q = 0; q < p.num_qubits(); ++q) {
        if (p.at(q) == 1 || p.at(q) == 2) {
            rotated.apply_unitary(
                measurement_basis_change(static_cast<Axis>(p.at(q))), q);
        }
    }
    std::vector<double> probs(rotated.dim());
    const auto amps = rotated.amplitudes();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        probs[k] = std::norm(amps[k]);
    }
    std::discrete_distribution<std::size_t> outcome(probs.begin(), probs.end());
    const std::uint64_t support = p.support_mask();
    std::int64_t total = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const std::size_t k = outcome(rng);
        total += (std::popcount(static_cast<std::uint64_t>(k) & support) & 1) ? -1 : 1;
    }
    return static_cast<double>(total) / static_cast<double>(shots);
}

double sample_pauli_estimate(double exact, std::uint64_t shots, Rng &rng) {
    if (shots == 0) {
        throw ValidationError("shots must be >= 1");
    }
    const double p_plus = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> plus(shots, p_plus);
    const auto n_plus = static_cast<double>(plus(rng));
    return 2.0 * n_plus / static_cast<double>(shots) - 1.0;
}

double expectation_hamiltonian(const PureState &state, const Hamiltonian &h,
                               std::optional<std::uint64_t> shots, Rng *rng) {
    if (state.num_qubits() != h.num_qubits()) {
        throw DimensionMismatch("Hamiltonian and state sizes differ");
    }
    if (shots && rng == nullptr) {
        throw ValidationError("shot estimation needs a random stream");
    }
    double total = 0.0;
    for (const auto &t : h.terms()) {
        const double e = shots ? expectation_shots(state, t.pauli, *shots, *rng)
                               : expectation_exact(state, t.pauli);
        total += t.coeff * e;
    }
    return total;
}

} // namespace clqnn
