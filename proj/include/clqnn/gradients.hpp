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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clqnn/circuit.hpp"
#include "clqnn/engine.hpp"
#include "clqnn/pauli.hpp"
#include "clqnn/rng.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

/// f(θ) = <in| V(θ)† O V(θ) |in>, evaluated exactly or with `shots`
/// measurements per Pauli term.
class LossEvaluator {
  public:
    LossEvaluator(ParamCircuit circuit, Hamiltonian observable, PureState input,
                  std::optional<std::uint64_t> shots = std::nullopt);
    LossEvaluator(ParamCircuit circuit, const PauliString &observable, PureState input,
                  std::optional<std::uint64_t> shots = std::nullopt);

    [[nodiscard]] const ParamCircuit &circuit() const { return circuit_; }
    [[nodiscard]] const Hamiltonian &observable() const { return observable_; }
    [[nodiscard]] const PureState &input() const { return input_; }
    [[nodiscard]] const std::optional<std::uint64_t> &shots() const { return shots_; }
    [[nodiscard]] bool exact() const { return !shots_; }

    /// How shot-mode gradients obtain the exact shifted values they sample
    /// from. Exact-mode gradients always simulate both shifts.
    [[nodiscard]] ShiftMethod shot_shift_method() const { return shot_method_; }
    void set_shot_shift_method(ShiftMethod m) { shot_method_ = m; }

  private:
    ParamCircuit circuit_;
    Hamiltonian observable_;
    PureState input_;
    std::optional<std::uint64_t> shots_;
    ShiftMethod shot_method_ = ShiftMethod::Reconstruct;
};

/// Σ_t c_t <P_t>. In shot mode each term is an independent estimate drawn from
/// `rng`.
double eval(const LossEvaluator &e, std::span<const double> theta, Rng *rng = nullptr);

/// Σ_t c_t v_t, or the shot estimate of it when `shots` is set.
double combine_terms(const Hamiltonian &h, std::span<const double> values,
                     std::optional<std::uint64_t> shots, Rng *rng);

/// g_j = f(θ + π/4 e_j) - f(θ - π/4 e_j). In shot mode the two shifted
/// circuits of component j are measured independently, from the streams
/// derive_seed(seed, {j, 0}) and derive_seed(seed, {j, 1}).
std::vector<double> param_shift_grad(const LossEvaluator &e, std::span<const double> theta,
                                     std::uint64_t seed = 0);

/// Shot-sampled gradient from a table of exact shifted values.
std::vector<double> sample_shift_grad(const Hamiltonian &h, const ShiftTable &table,
                                      std::optional<std::uint64_t> shots, std::uint64_t seed);

/// Central differences with exact expectations.
std::vector<double> finite_diff_grad(const LossEvaluator &e, std::span<const double> theta,
                                     double h = 1e-4);

double grad_norm_sq(std::span<const double> g);

} // namespace clqnn
