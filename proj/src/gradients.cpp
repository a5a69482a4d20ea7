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

#include "clqnn/gradients.hpp"

namespace clqnn {

LossEvaluator::LossEvaluator(ParamCircuit circuit, Hamiltonian observable, PureState input,
                             std::optional<std::uint64_t> shots)
    : circuit_(std::move(circuit)), observable_(std::move(observable)),
      input_(std::move(input)), shots_(shots) {
    if (observable_.num_qubits() != circuit_.num_qubits() ||
        input_.num_qubits() != circuit_.num_qubits()) {
        throw DimensionMismatch("circuit, observable and input widths differ");
    }
    if (shots_ && *shots_ == 0) {
        throw ValidationError("shots must be >= 1");
    }
}

LossEvaluator::LossEvaluator(ParamCircuit circuit, const PauliString &observable,
                             PureState input, std::optional<std::uint64_t> shots)
    : LossEvaluator(std::move(circuit),
                    Hamiltonian(observable.num_qubits(), {{1.0, observable}}),
                    std::move(input), shots) {}

double combine_terms(const Hamiltonian &h, std::span<const double> values,
                     std::optional<std::uint64_t> shots, Rng *rng) {
    if (shots && rng == nullptr) {
        throw ValidationError("shot estimation needs a random stream");
    }
    double total = 0.0;
    for (std::size_t t = 0; t < h.terms().size(); ++t) {
        const double v = shots ? sample_pauli_estimate(values[t], *shots, *rng) : values[t];
        total += h.terms()[t].coeff * v;
    }
    return total;
}

double eval(const LossEvaluator &e, std::span<const double> theta, Rng *rng) {
    const std::vector<double> v =
        term_values(e.circuit(), theta, e.observable(), e.input());
    return combine_terms(e.observable(), v, e.shots(), rng);
}

std::vector<double> sample_shift_grad(const Hamiltonian &h, const ShiftTable &table,
                                      std::optional<std::uint64_t> shots, std::uint64_t seed) {
    const std::size_t T = table.terms;
    std::vector<double> g(table.params, 0.0);
    for (std::size_t j = 0; j < table.params; ++j) {
        const std::span<const double> plus(&table.plus[j * T], T);
        const std::span<const double> minus(&table.minus[j * T], T);
        if (shots) {
            Rng rp = make_rng(seed, {j, 0});
            Rng rm = make_rng(seed, {j, 1});
            g[j] = combine_terms(h, plus, shots, &rp) - combine_terms(h, minus, shots, &rm);
        } else {
            g[j] = combine_terms(h, plus, shots, nullptr) -
                   combine_terms(h, minus, shots, nullptr);
        }
    }
    return g;
}

std::vector<double> param_shift_grad(const LossEvaluator &e, std::span<const double> theta,
                                     std::uint64_t seed) {
    const ShiftMethod method = e.exact() ? ShiftMethod::Literal : e.shot_shift_method();
    const ShiftTable table =
        shifted_values(e.circuit(), theta, e.observable(), e.input(), method);
    return sample_shift_grad(e.observable(), table, e.shots(), seed);
}

std::vector<double> finite_diff_grad(const LossEvaluator &e, std::span<const double> theta,
                                     double h) {
    if (!e.exact()) {
        throw ValidationError("finite differences need an exact-mode evaluator");
    }
    if (!(h > 0.0)) {
        throw ValidationError("finite-difference step must be positive");
    }
    std::vector<double> work(theta.begin(), theta.end());
    std::vector<double> g(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const double keep = work[j];
        work[j] = keep + h;
        const double up = eval(e, work);
        work[j] = keep - h;
        const double down = eval(e, work);
        work[j] = keep;
        g[j] = (up - down) / (2.0 * h);
    }
    return g;
}

double grad_norm_sq(std::span<const double> g) {
    double s = 0.0;
    for (double x : g) {
        s += x * x;
    }
    return s;
}

} // namespace clqnn
