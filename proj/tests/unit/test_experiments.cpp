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

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "clqnn/common.hpp"
#include "clqnn/experiments.hpp"
#include "clqnn/gradients.hpp"
#include "oracle.hpp"

using namespace clqnn;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<WineRow> synthetic_rows(std::size_t per_class) {
    std::vector<WineRow> rows;
    for (int label : {3, 1, 2}) {
        for (std::size_t i = 0; i < per_class; ++i) {
            WineRow r;
            r.label = label;
            for (std::size_t k = 0; k < kWineFeatures; ++k) {
                r.x[k] = static_cast<double>(rows.size()) * (k + 1) + 0.25 * label;
            }
            rows.push_back(r);
        }
    }
    return rows;
}

WineSample sample_with(double x0, int y) {
    WineSample s;
    s.x[0] = x0;
    s.y = y;
    return s;
}

ParamCircuit small_cl(std::size_t n) {
    return build_cl_qnn(n, 1, 1, InnerAnsatz::tensor_rotations());
}

} // namespace

TEST_CASE("ansatz names round-trip") {
    for (Ansatz a : {Ansatz::CL, Ansatz::HE, Ansatz::Random}) {
        CHECK(parse_ansatz(ansatz_name(a)) == a);
    }
    CHECK(parse_ansatz("HE") == Ansatz::HE);
    CHECK_THROWS_AS(parse_ansatz("qcnn"), ConfigError);
}

TEST_CASE("random ansatz takes the CL gate budget") {
    Rng rng = make_rng(1, {});
    const Architecture arch;
    const ParamCircuit cl = build_ansatz(Ansatz::CL, 6, arch, rng);
    const ParamCircuit r = build_ansatz(Ansatz::Random, 6, arch, rng);
    CHECK(gate_budget(r) == gate_budget(cl));
    CHECK(build_ansatz(Ansatz::HE, 6, arch, rng).param_count() == 3 * 6 * arch.he_layers);
}

TEST_CASE("toy loss") {
    CircuitBuilder empty(3);
    CHECK(toy_loss(std::move(empty).build(), {}) == 1.0);
    for (double theta : {0.0, 0.3, 1.1, 2.9}) {
        CircuitBuilder b(2);
        b.rotation(Axis::X, 0);
        CHECK_THAT(toy_loss(std::move(b).build(), std::vector<double>{theta}),
                   WithinAbs(std::cos(2 * theta), 1e-14));
    }
    Rng rng = make_rng(2, {});
    const ParamCircuit c = build_he_ansatz(4, 3);
    for (int i = 0; i < 20; ++i) {
        const double f = toy_loss(c, init_uniform(c.param_count(), rng));
        CHECK(std::abs(f) <= 1.0 + 1e-12);
    }
}

TEST_CASE("toy scan rows for CL clear the lower bounds") {
    ToyScanConfig cfg;
    cfg.n_min = 3;
    cfg.n_max = 5;
    cfg.ansatze = {Ansatz::CL};
    cfg.rounds = 200;
    cfg.seed = 8;
    const ToyScanResult r = toy_scan(cfg);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.samples.size() == 600);
    for (const auto &row : r.rows) {
        REQUIRE(row.bound_f_sq.has_value());
        CHECK_THAT(*row.bound_f_sq, WithinAbs(1.0 / 64, 1e-15));
        CHECK_THAT(*row.bound_grad_sq, WithinAbs(0.1875, 1e-15));
        CHECK(row.mean_f_sq >= *row.bound_f_sq - 3 * row.stderr_f_sq);
        CHECK(*row.mean_grad_sq >= *row.bound_grad_sq - 3 * *row.stderr_grad_sq);
        CHECK(row.median_f_sq >= 0.0);
    }
}

TEST_CASE("HE gradients shrink with width") {
    ToyScanConfig cfg;
    cfg.ansatze = {Ansatz::HE};
    cfg.rounds = 50;
    cfg.seed = 3;
    cfg.n_min = cfg.n_max = 6;
    const ToyRow six = toy_scan(cfg).rows[0];
    cfg.n_min = cfg.n_max = 12;
    const ToyRow twelve = toy_scan(cfg).rows[0];
    CHECK(*twelve.median_grad_sq < *six.median_grad_sq);
}

TEST_CASE("noiseless channel reproduces the state-vector scan") {
    ToyScanConfig cfg;
    cfg.n_min = 3;
    cfg.n_max = 4;
    cfg.rounds = 3;
    cfg.arch.inner_layers = 1;
    cfg.arch.he_layers = 2;
    const ToyScanResult pure = toy_scan(cfg);
    cfg.noise_q = 1.0;
    const ToyScanResult noisy = toy_scan(cfg);
    REQUIRE(pure.samples.size() == noisy.samples.size());
    for (std::size_t i = 0; i < pure.samples.size(); ++i) {
        CHECK_THAT(noisy.samples[i].f_sq, WithinAbs(pure.samples[i].f_sq, 1e-10));
        CHECK_THAT(*noisy.samples[i].grad_sq, WithinAbs(*pure.samples[i].grad_sq, 1e-9));
    }
}

TEST_CASE("noise lowers the squared loss") {
    ToyScanConfig cfg;
    cfg.n_min = cfg.n_max = 4;
    cfg.ansatze = {Ansatz::HE};
    cfg.rounds = 10;
    cfg.gradients = false;
    const ToyScanResult pure = toy_scan(cfg);
    cfg.noise_q = 0.9;
    const ToyScanResult noisy = toy_scan(cfg);
    for (std::size_t i = 0; i < pure.samples.size(); ++i) {
        CHECK(noisy.samples[i].f_sq <= pure.samples[i].f_sq + 1e-12);
        CHECK_FALSE(noisy.samples[i].grad_sq.has_value());
    }
}

TEST_CASE("toy scan is independent of the job count and validates its config") {
    ToyScanConfig cfg;
    cfg.n_min = 3;
    cfg.n_max = 4;
    cfg.rounds = 4;
    cfg.init = InitKind::HaarLocal;
    const ToyScanResult a = toy_scan(cfg);
    cfg.jobs = 3;
    const ToyScanResult b = toy_scan(cfg);
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].f_sq == b.samples[i].f_sq);
        CHECK(*a.samples[i].grad_sq == *b.samples[i].grad_sq);
    }
    cfg.n_max = 23;
    CHECK_THROWS_AS(toy_scan(cfg), ConfigError);
    cfg.n_max = 11;
    cfg.noise_q = 0.99;
    CHECK_THROWS_AS(toy_scan(cfg), ConfigError);
    cfg.n_min = 2;
    CHECK_THROWS_AS(toy_scan(cfg), ConfigError);
}

TEST_CASE("dense ground energy") {
    CHECK_THAT(ground_energy(ising_hamiltonian(2)), WithinAbs(-std::sqrt(2.0), 1e-12));
    for (std::size_t n : {3, 4, 5}) {
        const Hamiltonian h = ising_hamiltonian(n);
        oracle::Mat m = oracle::Mat::Zero(1 << n, 1 << n);
        for (const auto &t : h.terms()) {
            m += t.coeff * oracle::pauli_string(t.pauli.to_string());
        }
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(m);
        CHECK_THAT(ground_energy(h), WithinAbs(es.eigenvalues()(0), 1e-12));
    }
    CHECK_THROWS_AS(ground_energy(ising_hamiltonian(13)), ValidationError);
}

TEST_CASE("ising training records exact losses above the ground energy") {
    IsingConfig cfg;
    cfg.num_qubits = 4;
    cfg.blocks = 2;
    cfg.train.iterations = 25;
    cfg.train.seed = 6;
    cfg.train.optimizer = {OptimizerKind::Adam, 0.05};
    const IsingResult a = ising_experiment(cfg);
    REQUIRE(a.run.records.size() == 25);
    REQUIRE(a.ground_energy.has_value());
    for (const auto &rec : a.run.records) {
        REQUIRE(rec.exact_loss.has_value());
        CHECK(*rec.exact_loss >= *a.ground_energy - 1e-9);
        CHECK(std::isfinite(rec.loss));
    }
    CHECK(a.run.records.back().exact_loss < a.run.records.front().exact_loss);
    const IsingResult b = ising_experiment(cfg);
    CHECK(a.run.theta == b.run.theta);

    cfg.ansatz = Ansatz::Random;
    const IsingResult r = ising_experiment(cfg);
    CHECK(r.budget == a.budget);
    cfg.ansatz = Ansatz::HE;
    CHECK_THROWS_AS(ising_experiment(cfg), ConfigError);
}

TEST_CASE("wine parsing reports the offending line") {
    std::istringstream ok("1,1,2,3,4,5,6,7,8,9,10,11,12,13\n\n2, 0.5,2,3,4,5,6,7,8,9,10,11,12,13.5\r\n");
    const auto rows = parse_wine(ok);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].label == 2);
    CHECK(rows[1].x[0] == 0.5);
    CHECK(rows[1].x[12] == 13.5);

    std::istringstream short_row("1,1,2,3,4,5,6,7,8,9,10,11,12,13\n1,2,3\n");
    try {
        parse_wine(short_row);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
    std::istringstream bad_value("\n1,1,2,3,4,5,6,x,8,9,10,11,12,13\n");
    try {
        parse_wine(bad_value);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
    std::istringstream bad_label("a,1,2,3,4,5,6,7,8,9,10,11,12,13\n");
    CHECK_THROWS_AS(parse_wine(bad_label), ParseError);
    std::istringstream trailing("1,1,2,3,4,5,6,7,8,9,10,11,12,\n");
    CHECK_THROWS_AS(parse_wine(trailing), ParseError);
}

TEST_CASE("wine split sizes, balance, scaling and determinism") {
    const auto rows = synthetic_rows(60);
    const WineDataset d = make_wine_split(rows, std::nullopt, 4);
    CHECK(d.classes == std::make_pair(3, 1));
    REQUIRE(d.train.size() == 58);
    REQUIRE(d.test.size() == 58);
    for (const auto *split : {&d.train, &d.test}) {
        int pos = 0;
        for (const auto &s : *split) {
            pos += s.y == 1 ? 1 : 0;
            for (double v : s.x) {
                CHECK(v >= 0.0);
                CHECK(v <= std::numbers::pi);
            }
        }
        CHECK(pos == 29);
    }
    std::set<std::size_t> train(d.train_rows.begin(), d.train_rows.end());
    for (std::size_t i : d.test_rows) {
        CHECK(train.count(i) == 0);
    }
    for (std::size_t i = 0; i < d.train.size(); ++i) {
        CHECK(d.train[i].y == (rows[d.train_rows[i]].label == 3 ? 1 : -1));
    }
    const WineDataset again = make_wine_split(rows, std::nullopt, 4);
    CHECK(again.train_rows == d.train_rows);
    CHECK(again.test_rows == d.test_rows);
    CHECK(make_wine_split(rows, std::nullopt, 5).train_rows != d.train_rows);

    const WineDataset other = make_wine_split(rows, std::make_pair(2, 1), 4);
    CHECK(other.classes == std::make_pair(2, 1));
    CHECK_THROWS_AS(make_wine_split(synthetic_rows(57), std::nullopt, 1), DataError);
    CHECK_THROWS_AS(make_wine_split(rows, std::make_pair(1, 1), 1), ConfigError);
    CHECK_THROWS_AS(load_wine("/nonexistent/wine.data", std::nullopt, 1), DataError);
}

TEST_CASE("wine file loads") {
    const WineDataset d = load_wine(CLQNN_WINE_DATA, std::nullopt, 1);
    CHECK(d.classes == std::make_pair(1, 2));
    CHECK(d.train.size() == 58);
    CHECK(d.test.size() == 58);
}

TEST_CASE("qubit embedding") {
    const std::vector<double> zeros(13, 0.0);
    const PureState z = qubit_embed(zeros);
    CHECK(z.amplitudes()[0] == Complex(1, 0));
    CHECK(z.num_qubits() == 13);

    std::vector<double> x(13, 0.0);
    x[0] = std::numbers::pi / 4;
    const PureState s = qubit_embed(x);
    const oracle::Vec q0 = oracle::rotation('Y', std::numbers::pi / 4) * oracle::Vec::Unit(2, 0);
    CHECK_THAT(std::abs(s.amplitudes()[0] - q0(0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(s.amplitudes()[1] - q0(1)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(s.amplitudes()[1].real(), WithinAbs(1 / std::sqrt(2.0), 1e-15));

    // Every single-qubit marginal of a product state is pure.
    Rng rng = make_rng(5, {});
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    std::vector<double> r(6);
    for (auto &v : r) {
        v = u(rng);
    }
    const PureState p = qubit_embed(r);
    for (std::size_t q = 0; q < 6; ++q) {
        Complex rho[2][2] = {};
        for (std::size_t k = 0; k < p.dim(); ++k) {
            if ((k >> q) & 1U) {
                continue;
            }
            const std::size_t k1 = k | (std::size_t{1} << q);
            const Complex a[2] = {p.amplitudes()[k], p.amplitudes()[k1]};
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    rho[i][j] += a[i] * std::conj(a[j]);
                }
            }
        }
        const double purity = std::norm(rho[0][0]) + std::norm(rho[1][1]) + 2 * std::norm(rho[0][1]);
        CHECK_THAT(purity, WithinAbs(1.0, 1e-10));
    }
    CHECK_THROWS_AS(qubit_embed(std::vector<double>{}), ValidationError);
}

TEST_CASE("l1 loss examples") {
    const ParamCircuit c = CircuitBuilder(13).build();
    const std::vector<WineSample> perfect{sample_with(0.0, 1), sample_with(std::numbers::pi / 2, -1)};
    CHECK_THAT(qml_loss(c, {}, perfect, std::nullopt, nullptr), WithinAbs(0.0, 1e-15));
    Rng rng = make_rng(1, {});
    CHECK_THAT(qml_loss(c, {}, perfect, 100, &rng), WithinAbs(0.0, 1e-15));

    const std::vector<WineSample> flat{sample_with(std::numbers::pi / 4, 1),
                                       sample_with(std::numbers::pi / 4, -1)};
    CHECK_THAT(qml_loss(c, {}, flat, std::nullopt, nullptr), WithinAbs(1.0, 1e-15));

    const ParamCircuit he = build_he_ansatz(13, 1);
    std::vector<WineSample> batch;
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    for (int i = 0; i < 6; ++i) {
        WineSample s;
        for (auto &v : s.x) {
            v = u(rng);
        }
        s.y = i % 2 == 0 ? 1 : -1;
        batch.push_back(s);
    }
    for (int i = 0; i < 5; ++i) {
        const auto theta = init_uniform(he.param_count(), rng);
        const double l = qml_loss(he, theta, batch, 10, &rng);
        CHECK(l >= 0.0);
        CHECK(l <= 2.0);
    }
    CHECK_THROWS_AS(qml_loss(c, {}, flat, 10, nullptr), ValidationError);
}

TEST_CASE("l1 subgradient") {
    const ParamCircuit c = small_cl(13);
    Rng rng = make_rng(2, {});
    const std::vector<double> zero(c.param_count(), 0.0);
    // With all-zero angles and x = 0 or π/2 on qubit 0, <Z_0> = ±1 = y exactly.
    const std::vector<WineSample> exact{sample_with(0.0, 1), sample_with(std::numbers::pi / 2, -1)};
    for (double g : qml_grad(c, zero, exact, std::nullopt, rng)) {
        CHECK(g == 0.0);
    }
    for (double g : qml_grad(c, zero, exact, 50, rng)) {
        CHECK(g == 0.0);
    }

    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    WineSample s;
    for (auto &v : s.x) {
        v = u(rng);
    }
    s.y = 1;
    const std::vector<WineSample> one{s};
    const auto theta = init_uniform(c.param_count(), rng);
    const std::vector<double> g = qml_grad(c, theta, one, std::nullopt, rng);
    const double h = 1e-4;
    std::vector<double> work = theta;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        work[j] = theta[j] + h;
        const double up = qml_loss(c, work, one, std::nullopt, nullptr);
        work[j] = theta[j] - h;
        const double down = qml_loss(c, work, one, std::nullopt, nullptr);
        work[j] = theta[j];
        CHECK_THAT(g[j], WithinAbs((up - down) / (2 * h), 1e-5));
    }

    std::vector<WineSample> flipped = one;
    flipped[0].y = -1;
    const std::vector<double> gf = qml_grad(c, theta, flipped, std::nullopt, rng);
    for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(gf[j] == -g[j]);
    }
}

TEST_CASE("shot-mode subgradient is reproducible from the stream") {
    const ParamCircuit c = small_cl(13);
    Rng init = make_rng(3, {});
    const auto theta = init_uniform(c.param_count(), init);
    std::vector<WineSample> batch;
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    for (int i = 0; i < 4; ++i) {
        WineSample s;
        for (auto &v : s.x) {
            v = u(init);
        }
        s.y = i % 2 == 0 ? 1 : -1;
        batch.push_back(s);
    }
    Rng a = make_rng(9, {});
    Rng b = make_rng(9, {});
    CHECK(qml_grad(c, theta, batch, 100, a, 1) == qml_grad(c, theta, batch, 100, b, 3));
}

TEST_CASE("classification error") {
    const std::vector<WineSample> split{sample_with(0, 1), sample_with(0, -1), sample_with(0, 1),
                                        sample_with(0, -1)};
    CHECK(classification_error(std::vector<double>{0.5, -0.2, 0.9, -1.0}, split) == 0.0);
    CHECK(classification_error(std::vector<double>{-0.5, 0.2, -0.9, 1.0}, split) == 1.0);
    CHECK(classification_error(std::vector<double>{1, 1, 1, 1}, split) == 0.5);
    CHECK(classification_error(std::vector<double>{0.0, -0.2, 0.9, -1.0}, split) == 0.25);
    const std::vector<double> v{0.3, 0.1, -0.4, -0.7};
    const double base = classification_error(v, split);
    for (double scale : {1e-6, 0.5, 3.0}) {
        std::vector<double> w = v;
        for (auto &x : w) {
            x *= scale;
        }
        CHECK(classification_error(w, split) == base);
    }
    CHECK_THROWS_AS(classification_error(std::vector<double>{1.0}, split), DimensionMismatch);

    const ParamCircuit c = CircuitBuilder(13).build();
    const std::vector<WineSample> perfect{sample_with(0.0, 1), sample_with(std::numbers::pi / 2, -1)};
    CHECK(classification_error(c, {}, perfect) == 0.0);
}

TEST_CASE("classification experiment traces") {
    const WineDataset d = make_wine_split(synthetic_rows(60), std::nullopt, 2);
    WineConfig cfg;
    cfg.arch.inner_layers = 1;
    cfg.train.iterations = 3;
    cfg.train.seed = 11;
    const WineResult a = classification_experiment(d, cfg);
    REQUIRE(a.run.records.size() == 3);
    for (const auto &rec : a.run.records) {
        REQUIRE(rec.test_error.has_value());
        CHECK(*rec.test_error >= 0.0);
        CHECK(*rec.test_error <= 1.0);
        CHECK(rec.loss >= 0.0);
        CHECK(rec.loss <= 2.0);
        CHECK(rec.exact_loss.has_value());
    }
    const WineResult b = classification_experiment(d, cfg);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.run.records[i].loss == b.run.records[i].loss);
        CHECK(a.run.records[i].grad_norm == b.run.records[i].grad_norm);
    }
    cfg.train.batch_size = 0;
    CHECK_THROWS_AS(classification_experiment(d, cfg), ConfigError);
}
