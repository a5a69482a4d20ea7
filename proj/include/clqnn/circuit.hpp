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
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "clqnn/common.hpp"
#include "clqnn/rng.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

/// e^{-iθG} on one qubit; θ comes from `slot` when set, else from `angle`.
struct RotationOp {
    Axis axis;
    Qubit qubit;
    std::optional<std::size_t> slot;
    double angle = 0.0;
};

struct CzOp {
    Qubit a;
    Qubit b;
};

struct CnotOp {
    Qubit control;
    Qubit target;
};

using GateOp = std::variant<RotationOp, CzOp, CnotOp>;

using ParameterVector = std::vector<double>;
using QubitPair = std::pair<Qubit, Qubit>;

struct GateBudget {
    std::size_t n_1q = 0;
    std::size_t n_cz = 0;
    std::size_t n_cnot = 0;
    bool operator==(const GateBudget &) const = default;
};

/// Bookkeeping left by the controlled-layer builder: slots of the R_X R_Y R_X
/// rotations on the measured qubits 0..S-1, per block.
struct ClLayout {
    std::size_t blocks = 0;
    std::size_t s = 0;
    std::vector<std::vector<std::size_t>> head_slots;
};

/// Ordered gate list with parameter slots and operation-layer boundaries.
///
/// Invariants (checked on construction):
///  - qubit indices in range, two-qubit endpoints distinct;
///  - every slot in [0, param_count) is used by exactly one rotation;
///  - layer_marks strictly increasing and, for a non-empty circuit, ending at
///    ops.size(). A mark m means "an operation layer ends before ops[m]".
class ParamCircuit {
  public:
    explicit ParamCircuit(std::size_t num_qubits);
    ParamCircuit(std::size_t num_qubits, std::vector<GateOp> ops,
                 std::vector<std::size_t> layer_marks);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const { return ops_; }
    [[nodiscard]] const std::vector<std::size_t> &layer_marks() const {
        return layer_marks_;
    }
    [[nodiscard]] std::size_t param_count() const { return param_count_; }

    [[nodiscard]] const std::optional<ClLayout> &cl_layout() const {
        return cl_layout_;
    }
    void set_cl_layout(ClLayout layout) { cl_layout_ = std::move(layout); }

  private:
    std::size_t num_qubits_;
    std::vector<GateOp> ops_;
    std::vector<std::size_t> layer_marks_;
    std::size_t param_count_ = 0;
    std::optional<ClLayout> cl_layout_;
};

/// Appends gates and hands out fresh parameter slots in creation order.
class CircuitBuilder {
  public:
    explicit CircuitBuilder(std::size_t num_qubits);

    std::size_t rotation(Axis axis, Qubit q);
    void fixed_rotation(Axis axis, Qubit q, double angle);
    void cz(Qubit a, Qubit b);
    void cnot(Qubit control, Qubit target);
    /// Closes the current operation layer; no-op when nothing was added since
    /// the last mark.
    void end_layer();

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t next_slot() const { return next_slot_; }

    ParamCircuit build() &&;

  private:
    std::size_t num_qubits_;
    std::vector<GateOp> ops_;
    std::vector<std::size_t> marks_;
    std::size_t next_slot_ = 0;
};

enum class Entangler { Ring, Linear };

/// Parameterised unitary on the unmeasured qubits of a controlled-layer block.
struct InnerAnsatz {
    enum class Kind { TensorRotations, HardwareEfficient };
    Kind kind = Kind::TensorRotations;
    std::size_t he_layers = 0;
    Entangler entangler = Entangler::Ring;

    static InnerAnsatz tensor_rotations() { return {}; }
    static InnerAnsatz hardware_efficient(std::size_t layers,
                                          Entangler e = Entangler::Ring) {
        return {Kind::HardwareEfficient, layers, e};
    }
};

/// Nearest-neighbour ring (0,1),(1,2),...,(N-1,0). For N = 2 the ring has the
/// single pair (0,1).
std::vector<QubitPair> ring_pairs(std::size_t num_qubits);

/// L controlled-layer blocks, each: CZ layer, R_X R_Y R_X on qubits 0..S-1,
/// then the inner ansatz on qubits S..N-1. `cz_pairs` defaults to the ring.
ParamCircuit build_cl_qnn(std::size_t num_qubits, std::size_t s,
                          std::size_t blocks, const InnerAnsatz &inner,
                          const std::optional<std::vector<QubitPair>> &cz_pairs =
                              std::nullopt);

/// L_HE layers of R_X R_Y R_X on every qubit followed by a CNOT entangler.
ParamCircuit build_he_ansatz(std::size_t num_qubits, std::size_t layers,
                             Entangler entangler = Entangler::Ring);

/// Random-structure circuit with exactly the budgeted gate counts.
ParamCircuit build_random_qnn(std::size_t num_qubits, const GateBudget &budget,
                              Rng &rng);

GateBudget gate_budget(const ParamCircuit &c);

/// Largest number of rotation gates acting on any one qubit.
std::size_t rotation_depth(const ParamCircuit &c);

/// Angle of a rotation under a parameter vector.
double rotation_angle(const RotationOp &r, std::span<const double> theta);

/// V(θ)|input>
PureState run(const ParamCircuit &c, std::span<const double> theta,
              const PureState &input);

/// Same as `run`, in place.
void run_in_place(const ParamCircuit &c, std::span<const double> theta,
                  PureState &state);

/// Throws DimensionMismatch / ValidationError on a bad parameter vector.
void check_parameters(const ParamCircuit &c, std::span<const double> theta);

/// i.i.d. uniform angles in [0, 2π).
ParameterVector init_uniform(std::size_t count, Rng &rng);

/// Haar-distributed 2x2 unitary (complex Gaussian + Gram-Schmidt).
SingleQubitUnitary haar_unitary(Rng &rng);

struct EulerAngles {
    double theta1;
    double theta2;
    double theta3;
};

/// Angles with R_X(θ3) R_Y(θ2) R_X(θ1) = U up to a global phase, wrapped to
/// [0, 2π). At the poles of the middle angle θ1 is fixed to 0.
EulerAngles xyx_angles(const SingleQubitUnitary &u);

EulerAngles haar_local_angles(Rng &rng);

/// Uniform draws for every slot, then every R_X R_Y R_X run on a qubit gets
/// the Euler angles of an independent Haar unitary.
ParameterVector init_haar_local(const ParamCircuit &c, Rng &rng);

} // namespace clqnn
