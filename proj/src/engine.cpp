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

#include "clqnn/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numbers>
#include <string>

#include "clqnn/kernels/kernels.hpp"

namespace clqnn {

namespace {

using kernels::Mat2;
using Buffer = std::vector<Complex>;

struct FusedRotation {
    Axis axis;
    double angle;
    std::optional<std::size_t> slot;
};

struct TwoQubitGate {
    bool is_cnot;
    Qubit a; // CZ endpoint or CNOT control
    Qubit b; // CZ endpoint or CNOT target
};

enum class StepKind { Single, Gate, Paired };

// A fused run of rotations on one qubit, a lone CZ/CNOT, or a rotation run
// merged with an adjacent CZ/CNOT that shares its qubit (one kernel pass).
struct Step {
    StepKind kind = StepKind::Single;
    Qubit target = 0;
    std::vector<FusedRotation> rots;
    Mat2 m{};
    bool has_slots = false;
    TwoQubitGate gate{};
    bool matrix_first = true; // Paired: rotations act before the gate
    std::uint64_t mask = 0;
    bool live = true;
    bool absorbed = false;
};

Mat2 identity2() { return {1, 0, 0, 1}; }

Mat2 adjoint(const Mat2 &m) {
    return {std::conj(m.m00), std::conj(m.m10), std::conj(m.m01), std::conj(m.m11)};
}

// Product of the rotations (later ones on the left), with rotation `pos`
// shifted by `shift`.
Mat2 fused_matrix(const std::vector<FusedRotation> &rots, std::size_t pos, double shift) {
    Mat2 m = identity2();
    for (std::size_t i = 0; i < rots.size(); ++i) {
        const double angle = rots[i].angle + (i == pos ? shift : 0.0);
        m = matmul(rotation_matrix(rots[i].axis, angle), m);
    }
    return m;
}

struct Program {
    std::size_t num_qubits = 0;
    std::vector<Step> steps;
};

std::vector<Step> raw_steps(const ParamCircuit &c, std::span<const double> theta) {
    std::vector<Step> steps;
    std::vector<std::vector<FusedRotation>> pending(c.num_qubits());
    auto flush = [&](Qubit q) {
        if (pending[q].empty()) {
            return;
        }
        Step s;
        s.target = q;
        s.rots = std::move(pending[q]);
        pending[q].clear();
        for (const auto &r : s.rots) {
            s.has_slots = s.has_slots || r.slot.has_value();
        }
        s.m = fused_matrix(s.rots, s.rots.size(), 0.0);
        s.mask = std::uint64_t{1} << q;
        steps.push_back(std::move(s));
    };
    auto two_qubit = [&](bool is_cnot, Qubit a, Qubit b) {
        flush(a);
        flush(b);
        Step s;
        s.kind = StepKind::Gate;
        s.gate = {is_cnot, a, b};
        s.mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        steps.push_back(std::move(s));
    };
    for (const GateOp &op : c.ops()) {
        if (const auto *r = std::get_if<RotationOp>(&op)) {
            pending[r->qubit].push_back({r->axis, rotation_angle(*r, theta), r->slot});
        } else if (const auto *z = std::get_if<CzOp>(&op)) {
            two_qubit(false, z->a, z->b);
        } else {
            const auto &x = std::get<CnotOp>(op);
            two_qubit(true, x.control, x.target);
        }
    }
    for (Qubit q = 0; q < c.num_qubits(); ++q) {
        flush(q);
    }
    return steps;
}

// Merges rotation runs into neighbouring two-qubit gates. A gate takes the
// last run on one of its qubits if nothing touched that qubit since; a run
// that directly follows a lone gate on its qubit moves back into it.
std::vector<Step> fuse(std::vector<Step> raw, std::size_t num_qubits) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<Step> out;
    out.reserve(raw.size());
    std::vector<std::size_t> last(num_qubits, kNone);
    for (Step &s : raw) {
        if (s.kind == StepKind::Single) {
            const std::size_t p = last[s.target];
            if (p != kNone && out[p].kind == StepKind::Gate) {
                Step &g = out[p];
                g.kind = StepKind::Paired;
                g.target = s.target;
                g.rots = std::move(s.rots);
                g.m = s.m;
                g.has_slots = s.has_slots;
                g.matrix_first = false;
                continue;
            }
            out.push_back(std::move(s));
            last[out.back().target] = out.size() - 1;
            continue;
        }
        const TwoQubitGate g = s.gate;
        const Qubit order[2] = {g.is_cnot ? g.b : g.a, g.is_cnot ? g.a : g.b};
        for (Qubit q : order) {
            const std::size_t p = last[q];
            if (p != kNone && out[p].kind == StepKind::Single && !out[p].absorbed) {
                Step merged = std::move(out[p]);
                out[p].absorbed = true;
                merged.kind = StepKind::Paired;
                merged.gate = g;
                merged.matrix_first = true;
                merged.mask |= s.mask;
                s = std::move(merged);
                break;
            }
        }
        out.push_back(std::move(s));
        last[g.a] = out.size() - 1;
        last[g.b] = out.size() - 1;
    }
    std::erase_if(out, [](const Step &s) { return s.absorbed; });
    return out;
}

Program compile(const ParamCircuit &c, std::span<const double> theta,
                std::uint64_t observable_support) {
    Program prog;
    prog.num_qubits = c.num_qubits();
    prog.steps = fuse(raw_steps(c, theta), c.num_qubits());
    // Backward light cone of the observable's support.
    std::uint64_t cone = observable_support;
    for (std::size_t k = prog.steps.size(); k-- > 0;) {
        Step &s = prog.steps[k];
        s.live = (s.mask & cone) != 0;
        if (s.live) {
            cone |= s.mask;
        }
    }
    return prog;
}

void apply_gate(const TwoQubitGate &g, Buffer &v, std::size_t n) {
    const kernels::KernelTable &k = kernels::active_kernels();
    if (g.is_cnot) {
        k.apply_cnot(v.data(), n, g.a, g.b);
    } else {
        k.apply_cz(v.data(), n, g.a, g.b);
    }
}

// Rotation matrix `m` on qubit q together with gate g, in the given order.
void apply_pair(const TwoQubitGate &g, Qubit q, const Mat2 &m, bool matrix_first,
                Buffer &v, std::size_t n) {
    const Qubit other = g.a == q ? g.b : g.a;
    Mat2 m1 = m;
    bool swap_in = false;
    bool swap_out = false;
    if (!g.is_cnot) {
        m1 = matrix_first ? Mat2{m.m00, m.m01, -m.m10, -m.m11}
                          : Mat2{m.m00, -m.m01, m.m10, -m.m11};
    } else if (g.b == q) {
        m1 = matrix_first ? Mat2{m.m10, m.m11, m.m00, m.m01}
                          : Mat2{m.m01, m.m00, m.m11, m.m10};
    } else if (matrix_first) {
        swap_out = true;
    } else {
        swap_in = true;
    }
    kernels::active_kernels().apply_paired(v.data(), n, q, other, m, m1, swap_in, swap_out);
}

void apply_step(const Step &s, const Mat2 &m, Buffer &v, std::size_t n) {
    switch (s.kind) {
    case StepKind::Single:
        kernels::active_kernels().apply_1q(v.data(), n, s.target, m);
        break;
    case StepKind::Gate:
        apply_gate(s.gate, v, n);
        break;
    case StepKind::Paired:
        apply_pair(s.gate, s.target, m, s.matrix_first, v, n);
        break;
    }
}

void apply_step(const Step &s, Buffer &v, std::size_t n) { apply_step(s, s.m, v, n); }

// Every CZ and CNOT is its own inverse.
void unapply_step(const Step &s, Buffer &v, std::size_t n) {
    switch (s.kind) {
    case StepKind::Single:
        kernels::active_kernels().apply_1q(v.data(), n, s.target, adjoint(s.m));
        break;
    case StepKind::Gate:
        apply_gate(s.gate, v, n);
        break;
    case StepKind::Paired:
        apply_pair(s.gate, s.target, adjoint(s.m), !s.matrix_first, v, n);
        break;
    }
}

void run_live_from(const Program &p, std::size_t first, Buffer &v) {
    for (std::size_t k = first; k < p.steps.size(); ++k) {
        if (p.steps[k].live) {
            apply_step(p.steps[k], v, p.num_qubits);
        }
    }
}

void fill_terms(const Buffer &v, std::size_t n, const Hamiltonian &h, double *out) {
    const kernels::KernelTable &k = kernels::active_kernels();
    for (std::size_t t = 0; t < h.terms().size(); ++t) {
        const PauliString &p = h.terms()[t].pauli;
        out[t] = k.pauli_expectation(v.data(), n, p.x_mask(), p.z_mask(), p.y_count());
    }
}

std::uint64_t support_of(const Hamiltonian &h) {
    std::uint64_t m = 0;
    for (const auto &t : h.terms()) {
        m |= t.pauli.support_mask();
    }
    return m;
}

void check_inputs(const ParamCircuit &c, std::span<const double> theta,
                  const Hamiltonian &h, const PureState &input) {
    check_parameters(c, theta);
    if (input.num_qubits() != c.num_qubits() || h.num_qubits() != c.num_qubits()) {
        throw DimensionMismatch("circuit, observable and input widths differ");
    }
}

Buffer to_buffer(const PureState &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

// P|ψ> for a Pauli string: P|k> = i^ny (-1)^popcount(k & z) |k ^ x>.
Buffer apply_pauli(const Buffer &psi, const PauliString &p) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex ph = kPhase[p.y_count() % 4];
    Buffer out(psi.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const bool odd = (std::popcount(static_cast<std::uint64_t>(k) & z) & 1) != 0;
        out[k ^ x] = odd ? -ph * psi[k] : ph * psi[k];
    }
    return out;
}

// <λ| (I ⊗ d ⊗ I) |ψ> with d on qubit q.
Complex bilinear_1q(const Buffer &l, const Buffer &a, Qubit q, const Mat2 &d) {
    const std::size_t half = a.size() / 2;
    const std::size_t bit = std::size_t{1} << q;
    Complex acc = 0;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = kernels::insert_zero_bit(i, q);
        const std::size_t i1 = i0 | bit;
        acc += std::conj(l[i0]) * (d.m00 * a[i0] + d.m01 * a[i1]) +
               std::conj(l[i1]) * (d.m10 * a[i0] + d.m11 * a[i1]);
    }
    return acc;
}

Mat2 pauli_matrix(Axis axis) { return SingleQubitUnitary::pauli(axis).matrix(); }

// For every slotted rotation, per-term values after shifting its angle by each
// entry of `shifts`; results go to out[s][slot * terms + t].
void shifted_sweep(const Program &prog, const Hamiltonian &h, const Buffer &input,
                   std::span<const double> shifts, std::vector<std::vector<double>> &out,
                   std::vector<bool> &touched) {
    const std::size_t terms = h.terms().size();
    const std::size_t n = prog.num_qubits;
    Buffer cursor = input;
    Buffer work;
    for (std::size_t k = 0; k < prog.steps.size(); ++k) {
        const Step &s = prog.steps[k];
        if (!s.live) {
            continue;
        }
        if (s.has_slots) {
            for (std::size_t pos = 0; pos < s.rots.size(); ++pos) {
                if (!s.rots[pos].slot) {
                    continue;
                }
                const std::size_t slot = *s.rots[pos].slot;
                touched[slot] = true;
                for (std::size_t si = 0; si < shifts.size(); ++si) {
                    work = cursor;
                    apply_step(s, fused_matrix(s.rots, pos, shifts[si]), work, n);
                    run_live_from(prog, k + 1, work);
                    fill_terms(work, n, h, &out[si][slot * terms]);
                }
            }
        }
        apply_step(s, cursor, n);
    }
}

} // namespace

std::vector<double> term_values(const ParamCircuit &c, std::span<const double> theta,
                                const Hamiltonian &h, const PureState &input) {
    check_inputs(c, theta, h, input);
    const Program prog = compile(c, theta, support_of(h));
    Buffer v = to_buffer(input);
    run_live_from(prog, 0, v);
    std::vector<double> out(h.terms().size());
    fill_terms(v, prog.num_qubits, h, out.data());
    return out;
}

ShiftTable shifted_values(const ParamCircuit &c, std::span<const double> theta,
                          const Hamiltonian &h, const PureState &input,
                          ShiftMethod method) {
    check_inputs(c, theta, h, input);
    const Program prog = compile(c, theta, support_of(h));
    const std::size_t n = prog.num_qubits;
    const std::size_t P = c.param_count();
    const std::size_t T = h.terms().size();
    const Buffer in = to_buffer(input);

    ShiftTable table;
    table.params = P;
    table.terms = T;
    table.base.assign(T, 0.0);
    Buffer final_state = in;
    run_live_from(prog, 0, final_state);
    fill_terms(final_state, n, h, table.base.data());

    std::vector<bool> touched(P, false);
    constexpr double kQuarter = std::numbers::pi / 4;
    if (method == ShiftMethod::Literal) {
        std::vector<std::vector<double>> out(2, std::vector<double>(P * T, 0.0));
        const double shifts[2] = {kQuarter, -kQuarter};
        shifted_sweep(prog, h, in, shifts, out, touched);
        table.plus = std::move(out[0]);
        table.minus = std::move(out[1]);
    } else {
        // Reverse sweep: g[j][t] = d f_t / d θ_j.
        std::vector<double> g(P * T, 0.0);
        Buffer psi = final_state;
        std::vector<Buffer> lambda;
        lambda.reserve(T);
        for (const auto &term : h.terms()) {
            lambda.push_back(apply_pauli(final_state, term.pauli));
        }
        for (std::size_t k = prog.steps.size(); k-- > 0;) {
            const Step &s = prog.steps[k];
            if (!s.live) {
                continue;
            }
            if (!s.has_slots) {
                unapply_step(s, psi, n);
                for (auto &l : lambda) {
                    unapply_step(s, l, n);
                }
                continue;
            }
            // Peel the gate off first when it acts after the rotations.
            const bool split = s.kind == StepKind::Paired && s.matrix_first;
            if (split) {
                apply_gate(s.gate, psi, n);
                for (auto &l : lambda) {
                    apply_gate(s.gate, l, n);
                }
            }
            // d/dθ_p of L R_p Rr applied to ψ_before equals
            // L (-i G_p) L† ψ_after, with L the rotations after p.
            Mat2 later = identity2();
            for (std::size_t pos = s.rots.size(); pos-- > 0;) {
                const FusedRotation &r = s.rots[pos];
                if (r.slot) {
                    Mat2 d = matmul(later, matmul(pauli_matrix(r.axis), adjoint(later)));
                    const Complex mi(0, -1);
                    d = {mi * d.m00, mi * d.m01, mi * d.m10, mi * d.m11};
                    for (std::size_t t = 0; t < T; ++t) {
                        g[*r.slot * T + t] =
                            2.0 * bilinear_1q(lambda[t], psi, s.target, d).real();
                    }
                }
                later = matmul(later, rotation_matrix(r.axis, r.angle));
            }
            if (split) {
                const Mat2 back = adjoint(s.m);
                kernels::active_kernels().apply_1q(psi.data(), n, s.target, back);
                for (auto &l : lambda) {
                    kernels::active_kernels().apply_1q(l.data(), n, s.target, back);
                }
                continue;
            }
            unapply_step(s, psi, n);
            for (auto &l : lambda) {
                unapply_step(s, l, n);
            }
        }
        std::vector<std::vector<double>> half_turn(1, std::vector<double>(P * T, 0.0));
        const double shifts[1] = {2 * kQuarter};
        shifted_sweep(prog, h, in, shifts, half_turn, touched);
        table.plus.assign(P * T, 0.0);
        table.minus.assign(P * T, 0.0);
        for (std::size_t j = 0; j < P; ++j) {
            for (std::size_t t = 0; t < T; ++t) {
                const std::size_t i = j * T + t;
                const double mid = 0.5 * (table.base[t] + half_turn[0][i]);
                table.plus[i] = mid + 0.5 * g[i];
                table.minus[i] = mid - 0.5 * g[i];
            }
        }
    }
    // Parameters outside the light cone do not move the observable.
    for (std::size_t j = 0; j < P; ++j) {
        if (!touched[j]) {
            for (std::size_t t = 0; t < T; ++t) {
                table.plus[j * T + t] = table.base[t];
                table.minus[j * T + t] = table.base[t];
            }
        }
    }
    return table;
}

} // namespace clqnn
