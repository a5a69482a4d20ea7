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

#include "clqnn/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace clqnn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Fs> struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs> Overload(Fs...) -> Overload<Fs...>;

void check_pair(Qubit a, Qubit b, std::size_t n, const char *what) {
    check_qubit(a, n);
    check_qubit(b, n);
    if (a == b) {
        throw InvalidGateError(std::string(what) + " endpoints must differ");
    }
}

double wrap_angle(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

// CNOT entangler over an ordered list of qubits.
void add_entangler(CircuitBuilder &b, const std::vector<Qubit> &qubits,
                   Entangler e) {
    const std::size_t m = qubits.size();
    if (m < 2) {
        return;
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        b.cnot(qubits[i], qubits[i + 1]);
    }
    if (e == Entangler::Ring) {
        b.cnot(qubits[m - 1], qubits[0]);
    }
}

void add_rotation_sublayers(CircuitBuilder &b, const std::vector<Qubit> &qubits,
                            std::vector<std::size_t> *slots = nullptr) {
    for (Axis axis : {Axis::X, Axis::Y, Axis::X}) {
        for (Qubit q : qubits) {
            const std::size_t s = b.rotation(axis, q);
            if (slots != nullptr) {
                slots->push_back(s);
            }
        }
        b.end_layer();
    }
}

void add_he_layers(CircuitBuilder &b, const std::vector<Qubit> &qubits,
                   std::size_t layers, Entangler e) {
    for (std::size_t l = 0; l < layers; ++l) {
        add_rotation_sublayers(b, qubits);
        add_entangler(b, qubits, e);
        b.end_layer();
    }
}

std::vector<Qubit> qubit_range(std::size_t lo, std::size_t hi) {
    std::vector<Qubit> out;
    for (std::size_t q = lo; q < hi; ++q) {
        out.push_back(q);
    }
    return out;
}

} // namespace

ParamCircuit::ParamCircuit(std::size_t num_qubits)
    : ParamCircuit(num_qubits, {}, {}) {}

ParamCircuit::ParamCircuit(std::size_t num_qubits, std::vector<GateOp> ops,
                           std::vector<std::size_t> layer_marks)
    : num_qubits_(num_qubits), ops_(std::move(ops)),
      layer_marks_(std::move(layer_marks)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxPureQubits) {
        throw ValidationError("circuit width must be in [1, 22]");
    }
    std::vector<int> seen;
    for (const GateOp &op : ops_) {
        std::visit(Overload{
                       [&](const RotationOp &r) {
                           check_qubit(r.qubit, num_qubits_);
                           if (r.slot) {
                               if (*r.slot >= seen.size()) {
                                   seen.resize(*r.slot + 1, 0);
                               }
                               ++seen[*r.slot];
                           } else if (!std::isfinite(r.angle)) {
                               throw ValidationError("fixed angle is not finite");
                           }
                       },
                       [&](const CzOp &g) { check_pair(g.a, g.b, num_qubits_, "CZ"); },
                       [&](const CnotOp &g) {
                           check_pair(g.control, g.target, num_qubits_, "CNOT");
                       },
                   },
                   op);
    }
    for (std::size_t s = 0; s < seen.size(); ++s) {
        if (seen[s] != 1) {
            throw ValidationError("parameter slot " + std::to_string(s) +
                                  " used " + std::to_string(seen[s]) +
                                  " times");
        }
    }
    param_count_ = seen.size();
    for (std::size_t i = 0; i < layer_marks_.size(); ++i) {
        if (layer_marks_[i] > ops_.size() ||
            (i > 0 && layer_marks_[i] <= layer_marks_[i - 1])) {
            throw ValidationError("layer marks must be strictly increasing "
                                  "and within the op list");
        }
    }
    if (!ops_.empty() &&
        (layer_marks_.empty() || layer_marks_.back() != ops_.size())) {
        throw ValidationError("last layer mark must equal the op count");
    }
}

CircuitBuilder::CircuitBuilder(std::size_t num_qubits) : num_qubits_(num_qubits) {}

std::size_t CircuitBuilder::rotation(Axis axis, Qubit q) {
    check_qubit(q, num_qubits_);
    const std::size_t slot = next_slot_++;
    ops_.emplace_back(RotationOp{axis, q, slot, 0.0});
    return slot;
}

void CircuitBuilder::fixed_rotation(Axis axis, Qubit q, double angle) {
    check_qubit(q, num_qubits_);
    ops_.emplace_back(RotationOp{axis, q, std::nullopt, angle});
}

void CircuitBuilder::cz(Qubit a, Qubit b) {
    check_pair(a, b, num_qubits_, "CZ");
    ops_.emplace_back(CzOp{a, b});
}

void CircuitBuilder::cnot(Qubit control, Qubit target) {
    check_pair(control, target, num_qubits_, "CNOT");
    ops_.emplace_back(CnotOp{control, target});
}

void CircuitBuilder::end_layer() {
    const std::size_t end = ops_.size();
    if (end > 0 && (marks_.empty() || marks_.back() != end)) {
        marks_.push_back(end);
    }
}

ParamCircuit CircuitBuilder::build() && {
    end_layer();
    return {num_qubits_, std::move(ops_), std::move(marks_)};
}

std::vector<QubitPair> ring_pairs(std::size_t num_qubits) {
    std::vector<QubitPair> pairs;
    if (num_qubits < 2) {
        return pairs;
    }
    for (std::size_t i = 0; i + 1 < num_qubits; ++i) {
        pairs.emplace_back(i, i + 1);
    }
    if (num_qubits > 2) {
        pairs.emplace_back(num_qubits - 1, 0);
    }
    return pairs;
}

ParamCircuit build_cl_qnn(std::size_t num_qubits, std::size_t s,
                          std::size_t blocks, const InnerAnsatz &inner,
                          const std::optional<std::vector<QubitPair>> &cz_pairs) {
    if (s < 1 || s >= num_qubits) {
        throw ValidationError("CL-QNN needs 1 <= S < N");
    }
    if (blocks < 1) {
        throw ValidationError("CL-QNN needs at least one block");
    }
    const std::vector<QubitPair> pairs =
        cz_pairs ? *cz_pairs : ring_pairs(num_qubits);
    const std::vector<Qubit> head = qubit_range(0, s);
    const std::vector<Qubit> rest = qubit_range(s, num_qubits);

    CircuitBuilder b(num_qubits);
    ClLayout layout{blocks, s, {}};
    for (std::size_t l = 0; l < blocks; ++l) {
        for (const auto &[a, c] : pairs) {
            b.cz(a, c);
        }
        b.end_layer();
        std::vector<std::size_t> slots;
        add_rotation_sublayers(b, head, &slots);
        layout.head_slots.push_back(std::move(slots));
        if (inner.kind == InnerAnsatz::Kind::TensorRotations) {
            add_rotation_sublayers(b, rest);
        } else {
            add_he_layers(b, rest, inner.he_layers, inner.entangler);
        }
    }
    ParamCircuit c = std::move(b).build();
    c.set_cl_layout(std::move(layout));
    return c;
}

ParamCircuit build_he_ansatz(std::size_t num_qubits, std::size_t layers,
                             Entangler entangler) {
    if (num_qubits < 2 || layers < 1) {
        throw ValidationError("HE ansatz needs N >= 2 and L_HE >= 1");
    }
    CircuitBuilder b(num_qubits);
    add_he_layers(b, qubit_range(0, num_qubits), layers, entangler);
    return std::move(b).build();
}

ParamCircuit build_random_qnn(std::size_t num_qubits, const GateBudget &budget,
                              Rng &rng) {
    if (num_qubits < 1) {
        throw ValidationError("random circuit needs N >= 1");
    }
    if ((budget.n_cz > 0 || budget.n_cnot > 0) && num_qubits < 2) {
        throw ValidationError("two-qubit gates need N >= 2");
    }
    enum class Kind { Rot, Cz, Cnot };
    std::vector<Kind> kinds;
    kinds.insert(kinds.end(), budget.n_1q, Kind::Rot);
    kinds.insert(kinds.end(), budget.n_cz, Kind::Cz);
    kinds.insert(kinds.end(), budget.n_cnot, Kind::Cnot);
    std::shuffle(kinds.begin(), kinds.end(), rng);

    std::uniform_int_distribution<std::size_t> pick_qubit(0, num_qubits - 1);
    std::uniform_int_distribution<int> pick_axis(1, 3);
    auto pick_pair = [&]() {
        const Qubit a = pick_qubit(rng);
        std::uniform_int_distribution<std::size_t> other(0, num_qubits - 2);
        Qubit c = other(rng);
        if (c >= a) {
            ++c;
        }
        return QubitPair{a, c};
    };

    // Moments: a layer closes whenever the next gate touches a busy qubit.
    CircuitBuilder b(num_qubits);
    std::vector<bool> busy(num_qubits, false);
    auto touch = [&](std::initializer_list<Qubit> qs) {
        for (Qubit q : qs) {
            if (busy[q]) {
                b.end_layer();
                std::fill(busy.begin(), busy.end(), false);
                break;
            }
        }
        for (Qubit q : qs) {
            busy[q] = true;
        }
    };
    for (Kind k : kinds) {
        switch (k) {
        case Kind::Rot: {
            const auto axis = static_cast<Axis>(pick_axis(rng));
            const Qubit q = pick_qubit(rng);
            touch({q});
            b.rotation(axis, q);
            break;
        }
        case Kind::Cz: {
            const auto [a, c] = pick_pair();
            touch({a, c});
            b.cz(a, c);
            break;
        }
        case Kind::Cnot: {
            const auto [a, c] = pick_pair();
            touch({a, c});
            b.cnot(a, c);
            break;
        }
        }
    }
    return std::move(b).build();
}

GateBudget gate_budget(const ParamCircuit &c) {
    GateBudget g;
    for (const GateOp &op : c.ops()) {
        std::visit(Overload{
                       [&](const RotationOp &) { ++g.n_1q; },
                       [&](const CzOp &) { ++g.n_cz; },
                       [&](const CnotOp &) { ++g.n_cnot; },
                   },
                   op);
    }
    return g;
}

std::size_t rotation_depth(const ParamCircuit &c) {
    std::vector<std::size_t> count(c.num_qubits(), 0);
    for (const GateOp &op : c.ops()) {
        if (const auto *r = std::get_if<RotationOp>(&op)) {
            ++count[r->qubit];
        }
    }
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

double rotation_angle(const RotationOp &r, std::span<const double> theta) {
    return r.slot ? theta[*r.slot] : r.angle;
}

void check_parameters(const ParamCircuit &c, std::span<const double> theta) {
    if (theta.size() != c.param_count()) {
        throw DimensionMismatch("expected " + std::to_string(c.param_count()) +
                                " parameters, got " +
                                std::to_string(theta.size()));
    }
    for (double t : theta) {
        if (!std::isfinite(t)) {
            throw ValidationError("parameter vector has a non-finite entry");
        }
    }
}

void run_in_place(const ParamCircuit &c, std::span<const double> theta,
                  PureState &state) {
    check_parameters(c, theta);
    if (state.num_qubits() != c.num_qubits()) {
        throw DimensionMismatch("state width does not match circuit");
    }
    for (const GateOp &op : c.ops()) {
        std::visit(Overload{
                       [&](const RotationOp &r) {
                           state.apply_rotation(r.axis, rotation_angle(r, theta),
                                                r.qubit);
                       },
                       [&](const CzOp &g) { state.apply_cz(g.a, g.b); },
                       [&](const CnotOp &g) { state.apply_cnot(g.control, g.target); },
                   },
                   op);
    }
}

PureState run(const ParamCircuit &c, std::span<const double> theta,
              const PureState &input) {
    PureState out = input;
    run_in_place(c, theta, out);
    return out;
}

ParameterVector init_uniform(std::size_t count, Rng &rng) {
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    ParameterVector v(count);
    for (double &x : v) {
        x = dist(rng);
        if (x >= kTwoPi) {
            x = 0.0;
        }
    }
    return v;
}

SingleQubitUnitary haar_unitary(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Complex a[2][2];
    for (auto &row : a) {
        for (auto &x : row) {
            const double re = g(rng);
            const double im = g(rng);
            x = Complex(re, im) * (1.0 / std::numbers::sqrt2);
        }
    }
    // Gram-Schmidt on columns; R gets a positive diagonal, which is the phase
    // fix that makes Q Haar distributed.
    Complex c0[2] = {a[0][0], a[1][0]};
    Complex c1[2] = {a[0][1], a[1][1]};
    const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
    c0[0] /= n0;
    c0[1] /= n0;
    const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
    c1[0] -= proj * c0[0];
    c1[1] -= proj * c0[1];
    const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
    c1[0] /= n1;
    c1[1] /= n1;
    return SingleQubitUnitary(kernels::Mat2{c0[0], c1[0], c0[1], c1[1]});
}

EulerAngles xyx_angles(const SingleQubitUnitary &u) {
    // R_X(t) = H R_Z(t) H and R_Y(t) = H R_Y(-t) H, so the XYX angles of U are
    // the ZYZ angles of H U H with the middle one negated.
    const SingleQubitUnitary v = SingleQubitUnitary::hadamard() * u *
                                 SingleQubitUnitary::hadamard();
    const kernels::Mat2 &m = v.matrix();
    const Complex det = m.m00 * m.m11 - m.m01 * m.m10;
    const Complex scale = 1.0 / std::sqrt(det);
    const Complex v00 = m.m00 * scale;
    const Complex v10 = m.m10 * scale;
    constexpr double kPole = 1e-12;
    const double r00 = std::abs(v00);
    const double r10 = std::abs(v10);
    const double b = std::atan2(r10, r00);
    double a = 0.0;
    double c = 0.0;
    if (r10 < kPole) {
        a = -std::arg(v00);
    } else if (r00 < kPole) {
        a = std::arg(v10);
    } else {
        a = 0.5 * (std::arg(v10) - std::arg(v00));
        c = 0.5 * (-std::arg(v00) - std::arg(v10));
    }
    return {wrap_angle(c), wrap_angle(-b), wrap_angle(a)};
}

EulerAngles haar_local_angles(Rng &rng) { return xyx_angles(haar_unitary(rng)); }

ParameterVector init_haar_local(const ParamCircuit &c, Rng &rng) {
    ParameterVector theta = init_uniform(c.param_count(), rng);
    struct Pending {
        Axis axis;
        std::size_t slot;
    };
    std::vector<std::vector<Pending>> runs(c.num_qubits());
    auto assign = [&](std::vector<Pending> &run) {
        const EulerAngles e = haar_local_angles(rng);
        theta[run[0].slot] = e.theta1;
        theta[run[1].slot] = e.theta2;
        theta[run[2].slot] = e.theta3;
        run.clear();
    };
    for (const GateOp &op : c.ops()) {
        std::visit(Overload{
                       [&](const RotationOp &r) {
                           auto &run = runs[r.qubit];
                           if (!r.slot) {
                               run.clear();
                               return;
                           }
                           run.push_back({r.axis, *r.slot});
                           if (run.size() == 3) {
                               if (run[0].axis == Axis::X && run[1].axis == Axis::Y &&
                                   run[2].axis == Axis::X) {
                                   assign(run);
                               } else {
                                   run.erase(run.begin());
                               }
                           }
                       },
                       [&](const CzOp &g) {
                           runs[g.a].clear();
                           runs[g.b].clear();
                       },
                       [&](const CnotOp &g) {
                           runs[g.control].clear();
                           runs[g.target].clear();
                       },
                   },
                   op);
    }
    return theta;
}

} // namespace clqnn
