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
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clqnn/circuit.hpp"
#include "clqnn/optimizers.hpp"
#include "clqnn/pauli.hpp"
#include "clqnn/state.hpp"

namespace clqnn {

enum class Ansatz { CL, HE, Random };

std::string_view ansatz_name(Ansatz a);
/// Accepts "cl", "he", "random" (any case). Throws ConfigError otherwise.
Ansatz parse_ansatz(std::string_view text);

/// Shapes shared by the toy scan and the classifier.
struct Architecture {
    std::size_t cl_blocks = 2;
    std::size_t cl_s = 1;
    std::size_t inner_layers = 5;
    std::size_t he_layers = 10;
};

/// CL: `cl_blocks` blocks with an `inner_layers` hardware-efficient inner
/// ansatz. HE: `he_layers` layers. Random: the CL circuit's gate budget with a
/// structure drawn from `rng` (untouched for the other two).
ParamCircuit build_ansatz(Ansatz a, std::size_t num_qubits, const Architecture &arch, Rng &rng);

// ---- toy model ----

/// <Z_0> after V(θ) on |0...0>.
double toy_loss(const ParamCircuit &c, std::span<const double> theta);

enum class InitKind { Uniform, HaarLocal };

struct ToyScanConfig {
    std::size_t n_min = 3;
    std::size_t n_max = 12;
    std::vector<Ansatz> ansatze{Ansatz::CL, Ansatz::HE, Ansatz::Random};
    std::size_t rounds = 5;
    /// Depolarizing strength; set to use the density-matrix backend.
    std::optional<double> noise_q;
    InitKind init = InitKind::Uniform;
    Architecture arch;
    /// Exact ‖∇f‖² per round. Costly under noise, where it is off by default
    /// in the command-line front end.
    bool gradients = true;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

struct ToySample {
    std::size_t num_qubits = 0;
    Ansatz ansatz = Ansatz::CL;
    std::size_t round = 0;
    double f_sq = 0.0;
    std::optional<double> grad_sq;
};

struct ToyRow {
    std::size_t num_qubits = 0;
    Ansatz ansatz = Ansatz::CL;
    std::size_t rounds = 0;
    std::size_t params = 0;
    double mean_f_sq = 0.0;
    double stderr_f_sq = 0.0;
    double median_f_sq = 0.0;
    std::optional<double> mean_grad_sq;
    std::optional<double> stderr_grad_sq;
    std::optional<double> median_grad_sq;
    /// CL rows without noise: the two lower bounds for this architecture.
    std::optional<double> bound_f_sq;
    std::optional<double> bound_grad_sq;
};

struct ToyScanResult {
    std::vector<ToySample> samples;
    std::vector<ToyRow> rows;
};

/// Rounds are seeded by (seed, N, ansatz, round) and independent of `jobs`.
ToyScanResult toy_scan(const ToyScanConfig &config);

// ---- Ising ground state ----

struct IsingConfig {
    std::size_t num_qubits = 10;
    std::size_t blocks = 4;
    std::size_t s = 1;
    /// CL or Random; Random takes the CL circuit's gate budget.
    Ansatz ansatz = Ansatz::CL;
    TrainConfig train;
};

struct IsingResult {
    TrainResult run;
    GateBudget budget;
    std::size_t params = 0;
    std::optional<double> ground_energy;
};

/// Smallest eigenvalue of H by dense diagonalisation. N <= 12.
double ground_energy(const Hamiltonian &h);

/// Trains from a uniform initialisation on ising_hamiltonian(N). Every record
/// carries the exact loss next to the shot estimate. The ground energy is
/// filled in for N <= 12.
IsingResult ising_experiment(const IsingConfig &config);

// ---- wine classification ----

inline constexpr std::size_t kWineFeatures = 13;
inline constexpr std::size_t kWineSplitPerClass = 29;

struct WineSample {
    std::array<double, kWineFeatures> x{};
    int y = 0;
};

struct WineDataset {
    std::vector<WineSample> train;
    std::vector<WineSample> test;
    /// Labels mapped to +1 and -1 respectively.
    std::pair<int, int> classes{0, 0};
    /// Source row of each sample, in split order.
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
};

/// Raw rows: class label then 13 features per line. Blank lines are skipped.
struct WineRow {
    int label = 0;
    std::array<double, kWineFeatures> x{};
};
std::vector<WineRow> parse_wine(std::istream &in);

/// Picks two classes (default: the first two labels in file order), draws 29
/// training and 29 test samples per class with a seeded shuffle, and min-max
/// scales every feature to [0, π] from training statistics. Test values are
/// clamped to the same range.
WineDataset make_wine_split(const std::vector<WineRow> &rows,
                            std::optional<std::pair<int, int>> classes, std::uint64_t seed);

/// Reads `path` and calls make_wine_split. DataError if the file is missing.
WineDataset load_wine(const std::filesystem::path &path,
                      std::optional<std::pair<int, int>> classes, std::uint64_t seed);

/// ⊗_j R_Y(x_j)|0>
PureState qubit_embed(std::span<const double> x);

/// Exact <Z_0> for each sample.
std::vector<double> predictions(const ParamCircuit &c, std::span<const double> theta,
                                std::span<const WineSample> samples);

/// Mean |<Z_0> - y| over the batch, with shot estimates when `shots` is set.
double qml_loss(const ParamCircuit &c, std::span<const double> theta,
                std::span<const WineSample> batch, std::optional<std::uint64_t> shots, Rng *rng);

/// Subgradient of qml_loss: mean of sign(<Z_0> - y) ∂<Z_0>/∂θ with sign(0) = 0.
/// In shot mode the sign comes from its own fresh estimate and the derivative
/// from sampled parameter shifts.
std::vector<double> qml_grad(const ParamCircuit &c, std::span<const double> theta,
                             std::span<const WineSample> batch,
                             std::optional<std::uint64_t> shots, Rng &rng, std::size_t jobs = 1);

/// Fraction of samples with sign(<Z_0>) != y; a zero expectation is an error.
double classification_error(std::span<const double> values, std::span<const WineSample> samples);
double classification_error(const ParamCircuit &c, std::span<const double> theta,
                            std::span<const WineSample> samples);

struct WineConfig {
    Ansatz ansatz = Ansatz::CL;
    Architecture arch;
    TrainConfig train;
    std::size_t jobs = 1;
};

struct WineResult {
    TrainResult run;
    GateBudget budget;
    std::size_t params = 0;
};

/// Per iteration: gradient on a seeded batch of train.batch_size samples,
/// shot-estimated loss on the whole training split, exact test error. The
/// exact training loss is recorded too.
WineResult classification_experiment(const WineDataset &data, const WineConfig &config);

} // namespace clqnn
