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

#include "clqnn/optimizers.hpp"

#include <cmath>

#include "clqnn/common.hpp"

namespace clqnn {

namespace {

void require_lengths(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionMismatch("gradient length " + std::to_string(b) +
                                " does not match parameter count " + std::to_string(a));
    }
}

void require_lr(double lr) {
    if (!(lr >= 0.0) || !std::isfinite(lr)) {
        throw ValidationError("learning rate must be a finite non-negative number");
    }
}

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<double> sgd_step(std::span<const double> theta, std::span<const double> grad,
                             double lr) {
    require_lengths(theta.size(), grad.size());
    std::vector<double> out(theta.begin(), theta.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] -= lr * grad[j];
    }
    return out;
}

AdamState AdamState::init(std::size_t params, double lr) {
    AdamState s;
    s.lr = lr;
    s.m.assign(params, 0.0);
    s.v.assign(params, 0.0);
    return s;
}

void adam_step(AdamState &s, std::vector<double> &theta, std::span<const double> grad) {
    require_lengths(theta.size(), grad.size());
    require_lengths(s.m.size(), grad.size());
    ++s.t;
    const double c1 = 1.0 - std::pow(s.beta1, static_cast<double>(s.t));
    const double c2 = 1.0 - std::pow(s.beta2, static_cast<double>(s.t));
    for (std::size_t j = 0; j < theta.size(); ++j) {
        s.m[j] = s.beta1 * s.m[j] + (1.0 - s.beta1) * grad[j];
        s.v[j] = s.beta2 * s.v[j] + (1.0 - s.beta2) * grad[j] * grad[j];
        const double mhat = s.m[j] / c1;
        const double vhat = s.v[j] / c2;
        theta[j] -= s.lr * mhat / (std::sqrt(vhat) + s.eps);
    }
}

Optimizer::Optimizer(const OptimizerConfig &config, std::size_t params) : config_(config) {
    require_lr(config.lr);
    if (config.kind == OptimizerKind::Adam) {
        if (!(config.beta1 >= 0.0 && config.beta1 < 1.0 && config.beta2 >= 0.0 &&
              config.beta2 < 1.0 && config.eps > 0.0)) {
            throw ValidationError("Adam needs beta1, beta2 in [0, 1) and eps > 0");
        }
        adam_ = AdamState::init(params, config.lr);
        adam_.beta1 = config.beta1;
        adam_.beta2 = config.beta2;
        adam_.eps = config.eps;
    }
}

void Optimizer::step(std::vector<double> &theta, std::span<const double> grad) {
    if (config_.kind == OptimizerKind::Sgd) {
        theta = sgd_step(theta, grad, config_.lr);
    } else {
        adam_step(adam_, theta, grad);
    }
}

TrainResult train(const StepFn &step, std::vector<double> theta0, const TrainConfig &config) {
    if (config.iterations == 0) {
        throw ValidationError("iterations must be at least 1");
    }
    if (config.shots_per_term == 0) {
        throw ValidationError("shots_per_term must be at least 1");
    }
    Optimizer opt(config.optimizer, theta0.size());
    TrainResult result;
    result.theta = std::move(theta0);
    result.records.reserve(config.iterations);
    for (std::size_t it = 0; it < config.iterations; ++it) {
        Rng rng = make_rng(config.seed, {it});
        StepResult r = step(it, result.theta, rng);
        require_lengths(result.theta.size(), r.grad.size());
        RunRecord rec;
        rec.iteration = it;
        rec.loss = r.loss;
        rec.grad_norm = std::sqrt([&] {
            double s = 0.0;
            for (double g : r.grad) {
                s += g * g;
            }
            return s;
        }());
        rec.test_error = r.test_error;
        rec.exact_loss = r.exact_loss;
        result.records.push_back(rec);
        if (!std::isfinite(r.loss) || !all_finite(r.grad)) {
            result.diverged = true;
            result.diagnostic = "non-finite " +
                                std::string(std::isfinite(r.loss) ? "gradient" : "loss") +
                                " at iteration " + std::to_string(it);
            break;
        }
        opt.step(result.theta, r.grad);
    }
    return result;
}

} // namespace clqnn
