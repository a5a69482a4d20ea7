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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clqnn/circuit.hpp"
#include "clqnn/pauli.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

/// Exact per-term expectations at θ and at every θ ± (π/4) e_j.
struct ShiftTable {
    std::size_t params = 0;
    std::size_t terms = 0;
    std::vector<double> base;  // [t]
    std::vector<double> plus;  // [j * terms + t]
    std::vector<double> minus; // [j * terms + t]

    [[nodiscard]] double plus_at(std::size_t j, std::size_t t) const {
        return plus[j * terms + t];
    }
    [[nodiscard]] double minus_at(std::size_t j, std::size_t t) const {
        return minus[j * terms + t];
    }
};

enum class ShiftMethod {
    /// Simulate both shifted circuits for every parameter.
    Literal,
    /// Use f(θ ± π/4 e_j) = (f(θ) + f(θ + π/2 e_j)) / 2 ± g_j / 2, with one
    /// shifted simulation per parameter and g from a reverse sweep.
    Reconstruct,
};

/// Per-term exact expectations of the observable after V(θ).
std::vector<double> term_values(const ParamCircuit &c, std::span<const double> theta,
                                const Hamiltonian &h, const PureState &input);

/// All shifted per-term values. The circuit is compiled first: runs of
/// rotations on a qubit are fused into one matrix, gates outside the
/// observable's backward light cone are dropped (their shifts leave f
/// unchanged), and every shifted simulation restarts from a running prefix
/// state instead of from the input.
ShiftTable shifted_values(const ParamCircuit &c, std::span<const double> theta,
                          const Hamiltonian &h, const PureState &input,
                          ShiftMethod method);

} // namespace clqnn
