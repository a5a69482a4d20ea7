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

#include "clqnn/theory.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "clqnn/engine.hpp"
#include "clqnn/gradients.hpp"
#include "clqnn/parallel.hpp"

namespace clqnn {

namespace {

constexpr double kMatrixTolerance = 1e-12;
const Complex kI(0, 1);

void require_hermitian(const CMatrix &m, const char *name) {
    if (m.rows() != m.cols() || (m - m.adjoint()).cwiseAbs().maxCoeff() > kMatrixTolerance) {
        throw ValidationError(std::string(name) + " must be a hermitian square matrix");
    }
}

void require_involution(const CMatrix &g) {
    require_hermitian(g, "G");
    const CMatrix id = CMatrix::Identity(g.rows(), g.cols());
    if ((g * g - id).cwiseAbs().maxCoeff() > kMatrixTolerance) {
        throw ValidationError("G must satisfy G² = I");
    }
}

void require_same_size(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrix sizes differ");
    }
}

double tr(const CMatrix &a, const CMatrix &b) { return (a * b).trace().real(); }

CMatrix rotation(const CMatrix &g, double theta) {
    return std::cos(theta) * CMatrix::Identity(g.rows(), g.cols()) - kI * std::sin(theta) * g;
}

// Tr[O W ρ W†]
double rotated_expectation(const CMatrix &o, const CMatrix &w, const CMatrix &rho) {
    return (o * w * rho * w.adjoint()).trace().real();
}

void require_nodes(std::size_t nodes) {
    if (nodes == 0) {
        throw ValidationError("quadrature needs at least one node");
    }
}

CMatrix random_hermitian(Eigen::Index d, Rng &rng) {
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            a(r, c) = Complex(g(rng), g(rng));
        }
    }
    return (a + a.adjoint()) / 2.0;
}

CMatrix random_density(Eigen::Index d, Rng &rng) {
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            a(r, c) = Complex(g(rng), g(rng));
        }
    }
    CMatrix rho = a * a.adjoint();
    return rho / rho.trace();
}

CMatrix pauli_matrix(int code) {
    CMatrix m(2, 2);
    switch (code) {
    case 1:
        m << 0, 1, 1, 0;
        break;
    case 2:
        m << 0, -kI, kI, 0;
        break;
    default:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

void check_sigma_support(std::size_t S, const PauliString &sigma) {
    const std::uint64_t allowed = S >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << S) - 1;
    if ((sigma.support_mask() & ~allowed) != 0) {
        throw ValidationError("observable must act only on the first S qubits");
    }
}

double bound_scale(std::size_t L, std::size_t S) {
    return std::pow(8.0, -static_cast<double>(L * S));
}

struct Moments {
    double mean = 0.0;
    double std_error = 0.0;
};

Moments moments(const std::vector<double> &x) {
    Moments m;
    if (x.empty()) {
        return m;
    }
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    m.mean = sum / static_cast<double>(x.size());
    if (x.size() > 1) {
        double ss = 0.0;
        for (double v : x) {
            ss += (v - m.mean) * (v - m.mean);
        }
        const double var = ss / static_cast<double>(x.size() - 1);
        m.std_error = std::sqrt(var / static_cast<double>(x.size()));
    }
    return m;
}

struct LayoutShape {
    std::size_t L;
    std::size_t S;
};

LayoutShape layout_shape(const ParamCircuit &c, const PauliString &sigma) {
    if (const auto &layout = c.cl_layout()) {
        return {layout->blocks, layout->s};
    }
    return {0, sigma.locality()};
}

void check_mc_inputs(const ParamCircuit &c, const PauliString &sigma, const PureState &input) {
    if (sigma.num_qubits() != c.num_qubits() || input.num_qubits() != c.num_qubits()) {
        throw DimensionMismatch("circuit, observable and input widths differ");
    }
}

} // namespace

CommutantSplit commutant_split(const CMatrix &o, const CMatrix &g) {
    require_hermitian(o, "O");
    require_involution(g);
    require_same_size(o, g);
    const CMatrix gog = g * o * g;
    return {(o + gog) / 2.0, (o - gog) / 2.0};
}

LemmaCheck lemma2_check(const CMatrix &o, const CMatrix &g, const CMatrix &rho1,
                        const CMatrix &rho2, std::size_t nodes) {
    require_nodes(nodes);
    require_hermitian(rho1, "rho1");
    require_hermitian(rho2, "rho2");
    require_same_size(o, rho1);
    require_same_size(o, rho2);
    const CommutantSplit split = commutant_split(o, g);
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(nodes);
        const CMatrix w = rotation(g, theta);
        sum += rotated_expectation(o, w, rho1) * rotated_expectation(o, w, rho2);
    }
    LemmaCheck out;
    out.lhs = sum / static_cast<double>(nodes);
    const CMatrix io2g = kI * split.o2 * g;
    out.rhs = tr(split.o1, rho1) * tr(split.o1, rho2) +
              0.5 * tr(split.o2, rho1) * tr(split.o2, rho2) +
              0.5 * tr(io2g, rho1) * tr(io2g, rho2);
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

LemmaCheck lemma3_check(const CMatrix &o, const CMatrix &g, const CMatrix &rho,
                        std::size_t nodes) {
    require_nodes(nodes);
    require_hermitian(rho, "rho");
    require_same_size(o, rho);
    const CommutantSplit split = commutant_split(o, g);
    constexpr double kQuarter = std::numbers::pi / 4;
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(nodes);
        const double diff = rotated_expectation(o, rotation(g, theta + kQuarter), rho) -
                            rotated_expectation(o, rotation(g, theta - kQuarter), rho);
        sum += diff * diff;
    }
    LemmaCheck out;
    out.lhs = sum / static_cast<double>(nodes);
    const double a = tr(split.o2, rho);
    const double b = tr(kI * split.o2 * g, rho);
    out.rhs = 2.0 * a * a + 2.0 * b * b;
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

LemmaSuiteReport run_lemma_suite(std::size_t trials, std::size_t nodes, std::uint64_t seed,
                                 double tolerance) {
    LemmaSuiteReport report;
    std::uniform_int_distribution<int> code(1, 3);
    const CMatrix id2 = CMatrix::Identity(2, 2);
    for (std::size_t qubits = 1; qubits <= 2; ++qubits) {
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = make_rng(seed, {qubits, t});
            const Eigen::Index d = Eigen::Index{1} << qubits;
            CMatrix g = pauli_matrix(code(rng));
            if (qubits == 2) {
                g = (rng() & 1U) != 0 ? kron(g, id2) : kron(id2, g);
            }
            const CMatrix o = random_hermitian(d, rng);
            const CMatrix rho1 = random_density(d, rng);
            const CMatrix rho2 = random_density(d, rng);
            const LemmaCheck l2 = lemma2_check(o, g, rho1, rho2, nodes);
            const LemmaCheck l3 = lemma3_check(o, g, rho1, nodes);
            report.max_deviation_lemma2 = std::max(report.max_deviation_lemma2, l2.deviation);
            report.max_deviation_lemma3 = std::max(report.max_deviation_lemma3, l3.deviation);
            ++report.instances;
        }
    }
    report.passed = report.max_deviation_lemma2 < tolerance &&
                    report.max_deviation_lemma3 < tolerance;
    return report;
}

double theorem1_bound(std::size_t L, std::size_t S, const PureState &rho_in,
                      const PauliString &sigma) {
    check_sigma_support(S, sigma);
    const double t = expectation_exact(rho_in, three_bar(sigma));
    return t * t * bound_scale(L, S);
}

double theorem1_bound(std::size_t L, std::size_t S, const MixedState &rho_in,
                      const PauliString &sigma) {
    check_sigma_support(S, sigma);
    const double t = expectation_mixed(rho_in, three_bar(sigma));
    return t * t * bound_scale(L, S);
}

double theorem2_bound(std::size_t L, std::size_t S, const PureState &rho_in,
                      const PauliString &sigma) {
    if (L <= 1) {
        check_sigma_support(S, sigma);
        return 0.0;
    }
    return 12.0 * static_cast<double>((L - 1) * S) * theorem1_bound(L, S, rho_in, sigma);
}

double theorem2_bound(std::size_t L, std::size_t S, const MixedState &rho_in,
                      const PauliString &sigma) {
    if (L <= 1) {
        check_sigma_support(S, sigma);
        return 0.0;
    }
    return 12.0 * static_cast<double>((L - 1) * S) * theorem1_bound(L, S, rho_in, sigma);
}

BoundReport mc_expected_f_sq(const ParamCircuit &c, const PauliString &sigma,
                             const PureState &input, std::size_t samples, Rng &rng,
                             std::size_t jobs) {
    check_mc_inputs(c, sigma, input);
    const LayoutShape shape = layout_shape(c, sigma);
    const Hamiltonian h(c.num_qubits(), {{1.0, sigma}});
    const std::uint64_t master = rng();
    std::vector<double> values(samples);
    parallel_for(samples, jobs, [&](std::size_t i) {
        Rng local = make_rng(master, {i});
        const ParameterVector theta = init_uniform(c.param_count(), local);
        const double f = term_values(c, theta, h, input)[0];
        values[i] = f * f;
    });
    const Moments m = moments(values);
    BoundReport r;
    r.estimate = m.mean;
    r.std_error = m.std_error;
    r.bound = theorem1_bound(shape.L, shape.S, input, sigma);
    r.samples = samples;
    r.passed = r.estimate >= r.bound - 3.0 * r.std_error;
    return r;
}

BoundReport mc_expected_grad_norm_sq(const ParamCircuit &c, const PauliString &sigma,
                                     const PureState &input, std::size_t samples, Rng &rng,
                                     std::size_t jobs) {
    check_mc_inputs(c, sigma, input);
    const LayoutShape shape = layout_shape(c, sigma);
    std::vector<std::size_t> restricted;
    if (const auto &layout = c.cl_layout()) {
        for (std::size_t b = 0; b + 1 < layout->blocks; ++b) {
            restricted.insert(restricted.end(), layout->head_slots[b].begin(),
                              layout->head_slots[b].end());
        }
    }
    const LossEvaluator e(c, sigma, input);
    const std::uint64_t master = rng();
    std::vector<double> full(samples);
    std::vector<double> part(samples);
    parallel_for(samples, jobs, [&](std::size_t i) {
        Rng local = make_rng(master, {i});
        const ParameterVector theta = init_uniform(c.param_count(), local);
        const std::vector<double> g = param_shift_grad(e, theta);
        full[i] = grad_norm_sq(g);
        double s = 0.0;
        for (std::size_t j : restricted) {
            s += g[j] * g[j];
        }
        part[i] = s;
    });
    const Moments m = moments(full);
    BoundReport r;
    r.estimate = m.mean;
    r.std_error = m.std_error;
    r.bound = theorem2_bound(shape.L, shape.S, input, sigma);
    r.samples = samples;
    r.passed = r.estimate >= r.bound - 3.0 * r.std_error;
    if (c.cl_layout()) {
        const Moments mp = moments(part);
        r.restricted_estimate = mp.mean;
        r.restricted_std_error = mp.std_error;
    }
    return r;
}

std::vector<BlochVector> bloch_sample(BlochMode mode, std::size_t samples, Rng &rng) {
    std::vector<BlochVector> out;
    out.reserve(samples);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < samples; ++i) {
        kernels::Mat2 u;
        if (mode == BlochMode::UniformAngles) {
            const double t1 = angle(rng);
            const double t2 = angle(rng);
            u = matmul(rotation_matrix(Axis::Y, t2), rotation_matrix(Axis::X, t1));
        } else {
            u = haar_unitary(rng).matrix();
        }
        // first column = U|0>
        const Complex a = u.m00;
        const Complex b = u.m10;
        const Complex ab = std::conj(a) * b;
        out.push_back({2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)});
    }
    return out;
}

double z_variance(const std::vector<BlochVector> &points) {
    std::vector<double> z;
    z.reserve(points.size());
    for (const auto &p : points) {
        z.push_back(p[2]);
    }
    if (z.size() < 2) {
        return 0.0;
    }
    double mean = 0.0;
    for (double v : z) {
        mean += v;
    }
    mean /= static_cast<double>(z.size());
    double ss = 0.0;
    for (double v : z) {
        ss += (v - mean) * (v - mean);
    }
    return ss / static_cast<double>(z.size() - 1);
}

} // namespace clqnn
