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

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "clqnn/circuit.hpp"
#include "clqnn/noise.hpp"
#include "clqnn/pauli.hpp"
#include "clqnn/rng.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

using CMatrix = Eigen::MatrixXcd;

/// O = O1 + O2 with O1 commuting and O2 anticommuting with G.
struct CommutantSplit {
    CMatrix o1;
    CMatrix o2;
};

/// O1 = (O + GOG)/2, O2 = (O - GOG)/2. G must be a hermitian involution.
CommutantSplit commutant_split(const CMatrix &o, const CMatrix &g);

struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation = 0.0;
};

/// Trapezoid nodes for the θ averages. The integrands are trigonometric
/// polynomials of degree at most 4, so any count >= 8 is exact.
inline constexpr std::size_t kDefaultNodes = 64;

/// Average over θ of Tr[O W ρ1 W†] Tr[O W ρ2 W†] with W = e^{-iθG}, against
/// Tr[O1ρ1]Tr[O1ρ2] + ½Tr[O2ρ1]Tr[O2ρ2] + ½Tr[iO2Gρ1]Tr[iO2Gρ2].
LemmaCheck lemma2_check(const CMatrix &o, const CMatrix &g, const CMatrix &rho1,
                        const CMatrix &rho2, std::size_t nodes = kDefaultNodes);

/// Average over θ of (f(θ + π/4) - f(θ - π/4))² with f(θ) = Tr[O W ρ W†],
/// against 2 Tr[O2ρ]² + 2 Tr[iO2Gρ]².
LemmaCheck lemma3_check(const CMatrix &o, const CMatrix &g, const CMatrix &rho,
                        std::size_t nodes = kDefaultNodes);

struct LemmaSuiteReport {
    std::size_t instances = 0;
    double max_deviation_lemma2 = 0.0;
    double max_deviation_lemma3 = 0.0;
    bool passed = false;
};

/// Random hermitian O, density matrices and Pauli G, `trials` instances at
/// each of 2x2 (G a Pauli) and 4x4 (G = Pauli ⊗ I or I ⊗ Pauli). Passes when
/// every deviation is below `tolerance`.
LemmaSuiteReport run_lemma_suite(std::size_t trials, std::size_t nodes, std::uint64_t seed,
                                 double tolerance = 1e-10);

/// (Tr[three_bar(σ) ρ])² / 8^{LS}. σ must act only on qubits 0..S-1.
double theorem1_bound(std::size_t L, std::size_t S, const PureState &rho_in,
                      const PauliString &sigma);
double theorem1_bound(std::size_t L, std::size_t S, const MixedState &rho_in,
                      const PauliString &sigma);
/// 12 (L-1) S (Tr[three_bar(σ) ρ])² / 8^{LS}; zero for L <= 1.
double theorem2_bound(std::size_t L, std::size_t S, const PureState &rho_in,
                      const PauliString &sigma);
double theorem2_bound(std::size_t L, std::size_t S, const MixedState &rho_in,
                      const PauliString &sigma);

struct BoundReport {
    double estimate = 0.0;
    double std_error = 0.0;
    double bound = 0.0;
    std::size_t samples = 0;
    bool passed = false;
    /// Gradient reports only: the squared norm restricted to the head
    /// rotations of the first L-1 blocks, which alone carry the bound.
    std::optional<double> restricted_estimate;
    std::optional<double> restricted_std_error;
};

/// Monte Carlo E_θ f² over uniform θ, compared with theorem1_bound for the
/// circuit's controlled-layer layout (L = 0 when the circuit has none).
/// Sample i draws its parameters from derive_seed(rng(), {i}).
BoundReport mc_expected_f_sq(const ParamCircuit &c, const PauliString &sigma,
                             const PureState &input, std::size_t samples, Rng &rng,
                             std::size_t jobs = 1);

/// Monte Carlo E_θ ‖∇f‖² with exact parameter-shift gradients, compared with
/// theorem2_bound.
BoundReport mc_expected_grad_norm_sq(const ParamCircuit &c, const PauliString &sigma,
                                     const PureState &input, std::size_t samples, Rng &rng,
                                     std::size_t jobs = 1);

enum class BlochMode { UniformAngles, HaarLocal };

using BlochVector = std::array<double, 3>;

/// UniformAngles: R_Y(θ2) R_X(θ1)|0> with θ1, θ2 ~ U[0, 2π).
/// HaarLocal: a Haar-random 2x2 unitary applied to |0>.
std::vector<BlochVector> bloch_sample(BlochMode mode, std::size_t samples, Rng &rng);

/// Sample variance (n - 1 denominator) of the z components.
double z_variance(const std::vector<BlochVector> &points);

} // namespace clqnn
