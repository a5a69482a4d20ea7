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

#include "clqnn/experiments.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "clqnn/common.hpp"
#include "clqnn/engine.hpp"
#include "clqnn/gradients.hpp"
#include "clqnn/noise.hpp"
#include "clqnn/parallel.hpp"
#include "clqnn/theory.hpp"

namespace clqnn {

namespace {

// Seed-path tags that cannot collide with iteration indices.
constexpr std::uint64_t kInitTag = 0x494e4954;      // "INIT"
constexpr std::uint64_t kStructureTag = 0x53545243; // "STRC"
constexpr std::uint64_t kSplitTag = 0x53504c54;     // "SPLT"

PauliString z0(std::size_t n) { return PauliString::single(n, 0, Axis::Z); }

struct Stats {
    double mean = 0.0;
    double std_error = 0.0;
    double median = 0.0;
};

Stats stats(std::vector<double> x) {
    Stats s;
    if (x.empty()) {
        return s;
    }
    const double n = static_cast<double>(x.size());
    for (double v : x) {
        s.mean += v;
    }
    s.mean /= n;
    if (x.size() > 1) {
        double ss = 0.0;
        for (double v : x) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.std_error = std::sqrt(ss / (n - 1.0) / n);
    }
    std::sort(x.begin(), x.end());
    const std::size_t h = x.size() / 2;
    s.median = x.size() % 2 == 1 ? x[h] : 0.5 * (x[h - 1] + x[h]);
    return s;
}

std::size_t ansatz_index(Ansatz a) { return static_cast<std::size_t>(a); }

double noisy_toy_loss(const ParamCircuit &c, std::span<const double> theta, double q) {
    const MixedState rho = run_noisy(c, theta, q, MixedState(c.num_qubits()));
    return expectation_mixed(rho, z0(c.num_qubits()));
}

double exact_grad_sq(const ParamCircuit &c, std::span<const double> theta) {
    const LossEvaluator e(c, z0(c.num_qubits()), PureState(c.num_qubits()));
    return grad_norm_sq(param_shift_grad(e, theta));
}

double noisy_grad_sq(const ParamCircuit &c, std::span<const double> theta, double q) {
    std::vector<double> work(theta.begin(), theta.end());
    double s = 0.0;
    for (std::size_t j = 0; j < work.size(); ++j) {
        const double keep = work[j];
        work[j] = keep + std::numbers::pi / 4;
        const double up = noisy_toy_loss(c, work, q);
        work[j] = keep - std::numbers::pi / 4;
        const double down = noisy_toy_loss(c, work, q);
        work[j] = keep;
        s += (up - down) * (up - down);
    }
    return s;
}

} // namespace

std::string_view ansatz_name(Ansatz a) {
    switch (a) {
    case Ansatz::CL:
        return "cl";
    case Ansatz::HE:
        return "he";
    case Ansatz::Random:
        return "random";
    }
    return "?";
}

Ansatz parse_ansatz(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "cl") {
        return Ansatz::CL;
    }
    if (lower == "he") {
        return Ansatz::HE;
    }
    if (lower == "random") {
        return Ansatz::Random;
    }
    throw ConfigError("unknown ansatz '" + std::string(text) + "' (expected cl, he or random)");
}

ParamCircuit build_ansatz(Ansatz a, std::size_t num_qubits, const Architecture &arch, Rng &rng) {
    const auto cl = [&] {
        return build_cl_qnn(num_qubits, arch.cl_s, arch.cl_blocks,
                            InnerAnsatz::hardware_efficient(arch.inner_layers));
    };
    switch (a) {
    case Ansatz::CL:
        return cl();
    case Ansatz::HE:
        return build_he_ansatz(num_qubits, arch.he_layers);
    case Ansatz::Random:
        return build_random_qnn(num_qubits, gate_budget(cl()), rng);
    }
    throw ConfigError("unknown ansatz");
}

double toy_loss(const ParamCircuit &c, std::span<const double> theta) {
    const Hamiltonian h(c.num_qubits(), {{1.0, z0(c.num_qubits())}});
    return term_values(c, theta, h, PureState(c.num_qubits()))[0];
}

ToyScanResult toy_scan(const ToyScanConfig &config) {
    if (config.n_min < 3 || config.n_max < config.n_min) {
        throw ConfigError("toy scan needs 3 <= n_min <= n_max");
    }
    if (config.rounds == 0) {
        throw ConfigError("rounds must be at least 1");
    }
    const std::size_t cap = config.noise_q ? kMaxMixedQubits : kMaxPureQubits;
    if (config.n_max > cap) {
        throw ConfigError("toy scan with " + std::to_string(config.n_max) +
                          " qubits exceeds the " + std::to_string(cap) + "-qubit limit of the " +
                          (config.noise_q ? "density-matrix" : "state-vector") + " backend");
    }
    if (config.noise_q && !(*config.noise_q >= 0.0 && *config.noise_q <= 1.0)) {
        throw ConfigError("noise q must lie in [0, 1]");
    }

    struct Job {
        std::size_t n;
        Ansatz ansatz;
        std::size_t round;
    };
    std::vector<Job> jobs;
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
        for (Ansatz a : config.ansatze) {
            for (std::size_t r = 0; r < config.rounds; ++r) {
                jobs.push_back({n, a, r});
            }
        }
    }

    ToyScanResult result;
    result.samples.resize(jobs.size());
    std::vector<std::size_t> params(jobs.size());
    parallel_for(jobs.size(), config.jobs, [&](std::size_t i) {
        const Job &job = jobs[i];
        Rng rng = make_rng(config.seed, {job.n, ansatz_index(job.ansatz), job.round});
        const ParamCircuit c = build_ansatz(job.ansatz, job.n, config.arch, rng);
        const ParameterVector theta = config.init == InitKind::Uniform
                                          ? init_uniform(c.param_count(), rng)
                                          : init_haar_local(c, rng);
        ToySample &s = result.samples[i];
        s.num_qubits = job.n;
        s.ansatz = job.ansatz;
        s.round = job.round;
        const double f = config.noise_q ? noisy_toy_loss(c, theta, *config.noise_q)
                                        : toy_loss(c, theta);
        s.f_sq = f * f;
        if (config.gradients) {
            s.grad_sq = config.noise_q ? noisy_grad_sq(c, theta, *config.noise_q)
                                       : exact_grad_sq(c, theta);
        }
        params[i] = c.param_count();
    });

    for (std::size_t start = 0; start < jobs.size(); start += config.rounds) {
        ToyRow row;
        row.num_qubits = jobs[start].n;
        row.ansatz = jobs[start].ansatz;
        row.rounds = config.rounds;
        row.params = params[start];
        std::vector<double> f;
        std::vector<double> g;
        for (std::size_t i = start; i < start + config.rounds; ++i) {
            f.push_back(result.samples[i].f_sq);
            if (result.samples[i].grad_sq) {
                g.push_back(*result.samples[i].grad_sq);
            }
        }
        const Stats fs = stats(f);
        row.mean_f_sq = fs.mean;
        row.stderr_f_sq = fs.std_error;
        row.median_f_sq = fs.median;
        if (config.gradients) {
            const Stats gs = stats(g);
            row.mean_grad_sq = gs.mean;
            row.stderr_grad_sq = gs.std_error;
            row.median_grad_sq = gs.median;
        }
        if (row.ansatz == Ansatz::CL && !config.noise_q) {
            const PureState zero(row.num_qubits);
            row.bound_f_sq = theorem1_bound(config.arch.cl_blocks, config.arch.cl_s, zero,
                                            z0(row.num_qubits));
            row.bound_grad_sq = theorem2_bound(config.arch.cl_blocks, config.arch.cl_s, zero,
                                               z0(row.num_qubits));
        }
        result.rows.push_back(row);
    }
    return result;
}

double ground_energy(const Hamiltonian &h) {
    const std::size_t n = h.num_qubits();
    if (n == 0 || n > 12) {
        throw ValidationError("dense ground energy supports 1..12 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &term : h.terms()) {
        const std::uint64_t x = term.pauli.x_mask();
        const std::uint64_t z = term.pauli.z_mask();
        Complex phase(1, 0);
        for (std::size_t k = 0; k < term.pauli.y_count() % 4; ++k) {
            phase *= Complex(0, 1);
        }
        for (Eigen::Index k = 0; k < dim; ++k) {
            const auto uk = static_cast<std::uint64_t>(k);
            const double sign = (std::popcount(uk & z) & 1) != 0 ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(uk ^ x), k) += term.coeff * sign * phase;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

IsingResult ising_experiment(const IsingConfig &config) {
    if (config.num_qubits < 2) {
        throw ConfigError("the Ising experiment needs at least 2 qubits");
    }
    if (config.ansatz == Ansatz::HE) {
        throw ConfigError("the Ising experiment compares cl and random only");
    }
    const Hamiltonian h = ising_hamiltonian(config.num_qubits);
    ParamCircuit c = build_cl_qnn(config.num_qubits, config.s, config.blocks,
                                  InnerAnsatz::tensor_rotations());
    if (config.ansatz == Ansatz::Random) {
        Rng rng = make_rng(config.train.seed, {kStructureTag});
        c = build_random_qnn(config.num_qubits, gate_budget(c), rng);
    }
    Rng init = make_rng(config.train.seed, {kInitTag});
    ParameterVector theta0 = init_uniform(c.param_count(), init);
    const PureState input(config.num_qubits);
    const std::uint64_t shots = config.train.shots_per_term;

    const StepFn step = [&](std::size_t, std::span<const double> theta, Rng &rng) {
        const ShiftTable table = shifted_values(c, theta, h, input, ShiftMethod::Reconstruct);
        StepResult r;
        r.loss = combine_terms(h, table.base, shots, &rng);
        r.exact_loss = combine_terms(h, table.base, std::nullopt, nullptr);
        r.grad = sample_shift_grad(h, table, shots, rng());
        return r;
    };

    IsingResult result;
    result.budget = gate_budget(c);
    result.params = c.param_count();
    if (config.num_qubits <= 12) {
        result.ground_energy = ground_energy(h);
    }
    result.run = train(step, std::move(theta0), config.train);
    return result;
}

std::vector<WineRow> parse_wine(std::istream &in) {
    std::vector<WineRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (line.back() == ',') {
            fields.emplace_back();
        }
        if (fields.size() != kWineFeatures + 1) {
            throw ParseError("expected " + std::to_string(kWineFeatures + 1) +
                                 " comma-separated columns, found " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        const auto trim = [](std::string &s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        WineRow row;
        trim(fields[0]);
        const auto [lp, lec] =
            std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), row.label);
        if (lec != std::errc() || lp != fields[0].data() + fields[0].size()) {
            throw ParseError("class label '" + fields[0] + "' is not an integer", line_no);
        }
        for (std::size_t k = 0; k < kWineFeatures; ++k) {
            std::string &f = fields[k + 1];
            trim(f);
            double v = 0.0;
            const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc() || p != f.data() + f.size() || f.empty() || !std::isfinite(v)) {
                throw ParseError("feature " + std::to_string(k + 1) + " ('" + f +
                                     "') is not a number",
                                 line_no);
            }
            row.x[k] = v;
        }
        rows.push_back(row);
    }
    return rows;
}

WineDataset make_wine_split(const std::vector<WineRow> &rows,
                            std::optional<std::pair<int, int>> classes, std::uint64_t seed) {
    if (!classes) {
        std::vector<int> seen;
        for (const auto &r : rows) {
            if (std::find(seen.begin(), seen.end(), r.label) == seen.end()) {
                seen.push_back(r.label);
            }
        }
        if (seen.size() < 2) {
            throw DataError("the data holds fewer than two classes");
        }
        classes = std::make_pair(seen[0], seen[1]);
    }
    if (classes->first == classes->second) {
        throw ConfigError("the two classes must differ");
    }
    Rng rng = make_rng(seed, {kSplitTag});
    WineDataset data;
    data.classes = *classes;
    for (int label : {classes->first, classes->second}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].label == label) {
                idx.push_back(i);
            }
        }
        if (idx.size() < 2 * kWineSplitPerClass) {
            throw DataError("class " + std::to_string(label) + " has " +
                            std::to_string(idx.size()) + " samples; the split needs " +
                            std::to_string(2 * kWineSplitPerClass));
        }
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t k = 0; k < 2 * kWineSplitPerClass; ++k) {
            (k < kWineSplitPerClass ? data.train_rows : data.test_rows).push_back(idx[k]);
        }
    }
    std::shuffle(data.train_rows.begin(), data.train_rows.end(), rng);
    std::shuffle(data.test_rows.begin(), data.test_rows.end(), rng);
    const auto take = [&](const std::vector<std::size_t> &from, std::vector<WineSample> &to) {
        for (std::size_t i : from) {
            WineSample s;
            s.x = rows[i].x;
            s.y = rows[i].label == classes->first ? 1 : -1;
            to.push_back(s);
        }
    };
    take(data.train_rows, data.train);
    take(data.test_rows, data.test);

    for (std::size_t k = 0; k < kWineFeatures; ++k) {
        double lo = data.train[0].x[k];
        double hi = lo;
        for (const auto &s : data.train) {
            lo = std::min(lo, s.x[k]);
            hi = std::max(hi, s.x[k]);
        }
        const double span = hi - lo;
        const auto scale = [&](double v) {
            if (span <= 0.0) {
                return 0.0;
            }
            return std::clamp((v - lo) / span, 0.0, 1.0) * std::numbers::pi;
        };
        for (auto &s : data.train) {
            s.x[k] = scale(s.x[k]);
        }
        for (auto &s : data.test) {
            s.x[k] = scale(s.x[k]);
        }
    }
    return data;
}

WineDataset load_wine(const std::filesystem::path &path,
                      std::optional<std::pair<int, int>> classes, std::uint64_t seed) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open wine data file '" + path.string() + "'");
    }
    return make_wine_split(parse_wine(in), classes, seed);
}

PureState qubit_embed(std::span<const double> x) {
    if (x.empty() || x.size() > kMaxPureQubits) {
        throw ValidationError("embedding needs 1.." + std::to_string(kMaxPureQubits) +
                              " features");
    }
    std::vector<Complex> amps{Complex(1, 0)};
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double c = std::cos(x[j]);
        const double s = std::sin(x[j]);
        const std::size_t half = amps.size();
        amps.resize(2 * half);
        for (std::size_t k = 0; k < half; ++k) {
            amps[half + k] = amps[k] * s;
            amps[k] *= c;
        }
    }
    return PureState::from_amplitudes(std::move(amps));
}

std::vector<double> predictions(const ParamCircuit &c, std::span<const double> theta,
                                std::span<const WineSample> samples) {
    const Hamiltonian h(c.num_qubits(), {{1.0, z0(c.num_qubits())}});
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto &s : samples) {
        out.push_back(term_values(c, theta, h, qubit_embed(s.x))[0]);
    }
    return out;
}

namespace {

double l1_loss(std::span<const double> values, std::span<const WineSample> batch,
               std::optional<std::uint64_t> shots, Rng *rng) {
    if (batch.empty()) {
        throw ValidationError("empty batch");
    }
    if (shots && rng == nullptr) {
        throw ValidationError("shot estimation needs a random stream");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const double v = shots ? sample_pauli_estimate(values[i], *shots, *rng) : values[i];
        total += std::abs(v - batch[i].y);
    }
    return total / static_cast<double>(batch.size());
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

} // namespace

double qml_loss(const ParamCircuit &c, std::span<const double> theta,
                std::span<const WineSample> batch, std::optional<std::uint64_t> shots, Rng *rng) {
    return l1_loss(predictions(c, theta, batch), batch, shots, rng);
}

std::vector<double> qml_grad(const ParamCircuit &c, std::span<const double> theta,
                             std::span<const WineSample> batch,
                             std::optional<std::uint64_t> shots, Rng &rng, std::size_t jobs) {
    if (batch.empty()) {
        throw ValidationError("empty batch");
    }
    const Hamiltonian h(c.num_qubits(), {{1.0, z0(c.num_qubits())}});
    const ShiftMethod method = shots ? ShiftMethod::Reconstruct : ShiftMethod::Literal;
    const std::uint64_t master = rng();
    std::vector<std::vector<double>> parts(batch.size());
    parallel_for(batch.size(), jobs, [&](std::size_t i) {
        const ShiftTable table =
            shifted_values(c, theta, h, qubit_embed(batch[i].x), method);
        double value = table.base[0];
        if (shots) {
            Rng sign_rng = make_rng(master, {i, 0});
            value = sample_pauli_estimate(value, *shots, sign_rng);
        }
        const double s = sign(value - batch[i].y);
        std::vector<double> g(c.param_count(), 0.0);
        if (s != 0.0) {
            g = sample_shift_grad(h, table, shots, derive_seed(master, {i, 1}));
            for (double &x : g) {
                x *= s;
            }
        }
        parts[i] = std::move(g);
    });
    std::vector<double> grad(c.param_count(), 0.0);
    for (const auto &p : parts) {
        for (std::size_t j = 0; j < grad.size(); ++j) {
            grad[j] += p[j];
        }
    }
    for (double &x : grad) {
        x /= static_cast<double>(batch.size());
    }
    return grad;
}

double classification_error(std::span<const double> values, std::span<const WineSample> samples) {
    if (values.size() != samples.size()) {
        throw DimensionMismatch("one value per sample expected");
    }
    if (samples.empty()) {
        throw ValidationError("no samples");
    }
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (sign(values[i]) != static_cast<double>(samples[i].y)) {
            ++wrong;
        }
    }
    return static_cast<double>(wrong) / static_cast<double>(samples.size());
}

double classification_error(const ParamCircuit &c, std::span<const double> theta,
                            std::span<const WineSample> samples) {
    return classification_error(predictions(c, theta, samples), samples);
}

WineResult classification_experiment(const WineDataset &data, const WineConfig &config) {
    if (data.train.empty() || data.test.empty()) {
        throw DataError("empty wine split");
    }
    const std::size_t batch_size = config.train.batch_size;
    if (batch_size == 0 || batch_size > data.train.size()) {
        throw ConfigError("batch_size must lie in 1.." + std::to_string(data.train.size()));
    }
    Rng structure = make_rng(config.train.seed, {kStructureTag});
    const ParamCircuit c = build_ansatz(config.ansatz, kWineFeatures, config.arch, structure);
    Rng init = make_rng(config.train.seed, {kInitTag});
    ParameterVector theta0 = init_uniform(c.param_count(), init);
    const std::uint64_t shots = config.train.shots_per_term;

    std::vector<std::size_t> order(data.train.size());
    const StepFn step = [&](std::size_t, std::span<const double> theta, Rng &rng) {
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::vector<WineSample> batch;
        for (std::size_t k = 0; k < batch_size; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, order.size() - 1);
            std::swap(order[k], order[pick(rng)]);
            batch.push_back(data.train[order[k]]);
        }
        StepResult r;
        r.grad = qml_grad(c, theta, batch, shots, rng, config.jobs);
        const std::vector<double> train_values = predictions(c, theta, data.train);
        r.loss = l1_loss(train_values, data.train, shots, &rng);
        r.exact_loss = l1_loss(train_values, data.train, std::nullopt, nullptr);
        r.test_error = classification_error(c, theta, data.test);
        return r;
    };

    WineResult result;
    result.budget = gate_budget(c);
    result.params = c.param_count();
    result.run = train(step, std::move(theta0), config.train);
    return result;
}

} // namespace clqnn
