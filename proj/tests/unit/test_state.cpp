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

#include <cmath>
#include <numbers>
#include <random>

#include "clqnn/state.hpp"
#include "oracle.hpp"

using namespace clqnn;
using Catch::Matchers::WithinAbs;

namespace {

oracle::Vec to_vec(const PureState &s) {
    oracle::Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t k = 0; k < s.dim(); ++k) {
        v(static_cast<Eigen::Index>(k)) = s.amplitudes()[k];
    }
    return v;
}

double max_diff(const PureState &s, const oracle::Vec &v) {
    double m = 0;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        m = std::max(m, std::abs(s.amplitudes()[k] - v(static_cast<Eigen::Index>(k))));
    }
    return m;
}

PureState random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0;
    for (auto &x : a) {
        x = Complex(g(rng), g(rng));
        norm += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm);
    }
    return PureState::from_amplitudes(std::move(a));
}

double z_expect(const PureState &s, Qubit q) {
    double e = 0;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        e += ((k >> q) & 1U ? -1.0 : 1.0) * std::norm(s.amplitudes()[k]);
    }
    return e;
}

} // namespace

TEST_CASE("rotation X by zero is the identity") {
    std::mt19937_64 rng(1);
    PureState s = random_state(3, rng);
    PureState t = s;
    t.apply_rotation(Axis::X, 0.0, 1);
    REQUIRE(max_diff(t, to_vec(s)) == 0.0);
}

TEST_CASE("R_X(theta)|0> gives <Z> = cos 2 theta") {
    for (double th : {0.1, 0.7, 1.3, 2.9, -0.4}) {
        PureState s(1);
        s.apply_rotation(Axis::X, th, 0);
        const oracle::Vec v = oracle::rotation('X', th) * oracle::Vec::Unit(2, 0);
        CHECK(max_diff(s, v) < 1e-15);
        CHECK_THAT(z_expect(s, 0), WithinAbs(std::cos(2 * th), 1e-14));
    }
}

TEST_CASE("R_Y(pi/4)|0> is |+>") {
    PureState s(1);
    s.apply_rotation(Axis::Y, std::numbers::pi / 4, 0);
    const double h = (1.0 / std::numbers::sqrt2);
    CHECK_THAT(s.amplitudes()[0].real(), WithinAbs(h, 1e-15));
    CHECK_THAT(s.amplitudes()[1].real(), WithinAbs(h, 1e-15));
    CHECK_THAT(z_expect(s, 0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("CZ and CNOT on basis states") {
    PureState s = PureState::basis(2, 3);
    s.apply_cz(0, 1);
    CHECK(s.amplitudes()[3] == Complex(-1, 0));
    s.apply_cz(1, 0);
    CHECK(s.amplitudes()[3] == Complex(1, 0));

    PureState z(2);
    z.apply_cz(0, 1);
    CHECK(z.amplitudes()[0] == Complex(1, 0));

    // |10> in qubit order (q1 q0) is index 2: control qubit 1 set.
    PureState c = PureState::basis(2, 2);
    c.apply_cnot(1, 0);
    CHECK(c.amplitudes()[3] == Complex(1, 0));
    c.apply_cnot(1, 0);
    CHECK(c.amplitudes()[2] == Complex(1, 0));

    PureState zero(2);
    zero.apply_cnot(0, 1);
    CHECK(zero.amplitudes()[0] == Complex(1, 0));
}

TEST_CASE("gate errors") {
    PureState s(2);
    CHECK_THROWS_AS(s.apply_rotation(Axis::X, 0.1, 2), std::out_of_range);
    CHECK_THROWS_AS(s.apply_cz(1, 1), InvalidGateError);
    CHECK_THROWS_AS(s.apply_cnot(0, 0), InvalidGateError);
    CHECK_THROWS_AS(s.apply_cz(0, 5), std::out_of_range);
    CHECK_THROWS_AS(SingleQubitUnitary(kernels::Mat2{1, 0, 0, 2}), ValidationError);
    CHECK_THROWS_AS(PureState::from_amplitudes(std::vector<Complex>(3)), DimensionMismatch);
    CHECK_THROWS_AS(PureState(0), ValidationError);
}

TEST_CASE("single-qubit unitaries") {
    PureState s(1);
    s.apply_unitary(SingleQubitUnitary::identity(), 0);
    CHECK(s.amplitudes()[0] == Complex(1, 0));
    s.apply_unitary(SingleQubitUnitary::pauli(Axis::X), 0);
    CHECK(s.amplitudes()[1] == Complex(1, 0));
    PureState h(1);
    h.apply_unitary(SingleQubitUnitary::hadamard(), 0);
    oracle::Mat hm(2, 2);
    hm << 1, 1, 1, -1;
    hm /= std::sqrt(2.0);
    CHECK(max_diff(h, hm * oracle::Vec::Unit(2, 0)) < 1e-15);
}

TEST_CASE("every gate matches the Kronecker oracle for N <= 4") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-4, 4);
    const char axes[] = {'X', 'Y', 'Z'};
    for (std::size_t n = 1; n <= 4; ++n) {
        PureState s = random_state(n, rng);
        oracle::Vec v = to_vec(s);
        for (int step = 0; step < 60; ++step) {
            const std::size_t kind = rng() % (n > 1 ? 3 : 1);
            if (kind == 0) {
                const Axis axis = static_cast<Axis>(1 + rng() % 3);
                const std::size_t q = rng() % n;
                const double th = ang(rng);
                s.apply_rotation(axis, th, q);
                v = oracle::embed_1q(
                        oracle::rotation(axes[static_cast<int>(axis) - 1], th), q, n) *
                    v;
            } else {
                const std::size_t a = rng() % n;
                std::size_t b = rng() % (n - 1);
                b += (b >= a) ? 1 : 0;
                if (kind == 1) {
                    s.apply_cz(a, b);
                    v = oracle::cz(a, b, n) * v;
                } else {
                    s.apply_cnot(a, b);
                    v = oracle::cnot(a, b, n) * v;
                }
            }
            REQUIRE(max_diff(s, v) < 1e-12);
            REQUIRE(std::abs(s.norm_sq() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("rotation composition adds angles") {
    std::mt19937_64 rng(3);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        PureState a = random_state(3, rng);
        PureState b = a;
        a.apply_rotation(axis, 0.37, 2);
        a.apply_rotation(axis, 1.91, 2);
        b.apply_rotation(axis, 0.37 + 1.91, 2);
        CHECK(max_diff(a, to_vec(b)) < 1e-10);
    }
}

TEST_CASE("gates on disjoint qubits commute") {
    std::mt19937_64 rng(5);
    PureState a = random_state(4, rng);
    PureState b = a;
    a.apply_rotation(Axis::Y, 0.8, 0);
    a.apply_cnot(2, 3);
    b.apply_cnot(2, 3);
    b.apply_rotation(Axis::Y, 0.8, 0);
    CHECK(max_diff(a, to_vec(b)) < 1e-12);
}

TEST_CASE("norm stays at one over long gate sequences") {
    std::mt19937_64 rng(11);
    PureState s(6);
    for (int i = 0; i < 2000; ++i) {
        s.apply_rotation(static_cast<Axis>(1 + rng() % 3), 0.01 * static_cast<double>(rng() % 628),
                         rng() % 6);
        s.apply_cnot(rng() % 3, 3 + rng() % 3);
    }
    CHECK(std::abs(s.norm_sq() - 1.0) < 1e-9);
}

TEST_CASE("inner product") {
    PureState a(2);
    PureState b = PureState::basis(2, 1);
    CHECK(inner_product(a, a) == Complex(1, 0));
    CHECK(inner_product(a, b) == Complex(0, 0));
}
