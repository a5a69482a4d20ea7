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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clqnn/rng.hpp"

namespace clqnn {

/// θ - lr·g
std::vector<double> sgd_step(std::span<const double> theta, std::span<const double> grad,
                             double lr);

struct AdamState {
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::vector<double> m;
    std::vector<double> v;
    std::uint64_t t = 0;

    static AdamState init(std::size_t params, double lr);
};

/// Bias-corrected Adam update of `theta` in place.
void adam_step(AdamState &state, std::vector<double> &theta, std::span<const double> grad);

enum class OptimizerKind { Sgd, Adam };

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Adam;
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Either optimizer behind one interface; owns the Adam moments.
class Optimizer {
  public:
    Optimizer(const OptimizerConfig &config, std::size_t params);
    void step(std::vector<double> &theta, std::span<const double> grad);
    [[nodiscard]] const OptimizerConfig &config() const { return config_; }
    [[nodiscard]] const AdamState &adam() const { return adam_; }

  private:
    OptimizerConfig config_;
    AdamState adam_;
};

struct TrainConfig {
    std::size_t iterations = 200;
    std::uint64_t shots_per_term = 100;
    std::size_t batch_size = 8;
    std::uint64_t seed = 0;
    OptimizerConfig optimizer;
};

struct RunRecord {
    std::size_t iteration = 0;
    double loss = 0.0;
    double grad_norm = 0.0;
    std::optional<double> test_error;
    std::optional<double> exact_loss;
};

/// What one training iteration measures at the current parameters.
struct StepResult {
    double loss = 0.0;
    std::vector<double> grad;
    std::optional<double> test_error;
    std::optional<double> exact_loss;
};

/// Called once per iteration with a generator private to that iteration.
using StepFn =
    std::function<StepResult(std::size_t iteration, std::span<const double> theta, Rng &rng)>;

struct TrainResult {
    std::vector<RunRecord> records;
    std::vector<double> theta;
    bool diverged = false;
    std::string diagnostic;
};

/// Records the loss and gradient norm at the current parameters, then steps.
/// A non-finite loss or gradient stops training; the offending iteration is
/// still recorded and `diagnostic` says what went wrong.
TrainResult train(const StepFn &step, std::vector<double> theta0, const TrainConfig &config);

} // namespace clqnn
