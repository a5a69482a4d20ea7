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

#include "clqnn/theory.hpp"

using namespace clqnn;
using Catch::Matchers::WithinAbs;

namespace {

CMatrix pauli(char c) {
    CMatrix m(2, 2);
    const Complex i(0, 1);
    if (c == 'X') {
        m << 0, 1, 1, 0;
    } else if (c == 'Y') {
        m << 0, -i, i, 0;
    } else {
        m << 1, 0, 0, -1;
    }
    return m;
}

CMatrix ket0_density() {
    CMatrix rho = CMatrix::Zero(2, 2);
    rho(0, 0) = 1;
    return rho;
}

} // namespace

TEST_CASE("commutant split separates commuting and anticommuting parts") {
    const CMatrix z = pauli('Z');
    const CMatrix x = pauli('X');
    const CommutantSplit a = commutant_split(z, x);
    CHECK(a.o1.cwiseAbs().maxCoeff() < 1e-15);
    CHECK((a.o2 - z).cwiseAbs().maxCoeff() < 1e-15);

    const CommutantSplit b = commutant_split(x + 0.5 * z, x);
    CHECK((b.o1 - x).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((b.o2 - 0.5 * z).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((b.o1 * x - x * b.o1).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((b.o2 * x + x * b.o2).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("commutant split rejects bad generators") {
    const CMatrix z = pauli('Z');
    CHECK_THROWS_AS(commutant_split(z, 2.0 * pauli('X')), ValidationError);
    CHECK_THROWS_AS(commutant_split(z, pauli('X') * Complex(0, 1)), ValidationError);
    CHECK_THROWS_AS(commutant_split(z, CMatrix::Identity(4, 4)), DimensionMismatch);
    CHECK_THROWS_AS(commutant_split(pauli('Y') * Complex(0, 1), pauli('X')), ValidationError);
}

TEST_CASE("lemma checks on a single qubit by hand") {
    const CMatrix rho = ket0_density();
    const LemmaCheck l2 = lemma2_check(pauli('Z'), pauli('X'), rho, rho);
    CHECK_THAT(l2.lhs, WithinAbs(0.5, 1e-14));
    CHECK_THAT(l2.rhs, WithinAbs(0.5, 1e-14));
    const LemmaCheck l3 = lemma3_check(pauli('Z'), pauli('X'), rho);
    CHECK_THAT(l3.lhs, WithinAbs(2.0, 1e-14));
    CHECK_THAT(l3.rhs, WithinAbs(2.0, 1e-14));

    // Z commutes with its own rotation, so the average is the constant value.
    const LemmaCheck c = lemma2_check(pauli('Z'), pauli('Z'), rho, rho);
    CHECK_THAT(c.lhs, WithinAbs(1.0, 1e-14));
    CHECK_THAT(c.rhs, WithinAbs(1.0, 1e-14));
}

TEST_CASE("randomized lemma suite holds at the default quadrature") {
    const LemmaSuiteReport r = run_lemma_suite(100, kDefaultNodes, 7);
    CHECK(r.instances == 200);
    CHECK(r.passed);
    CHECK(r.max_deviation_lemma2 < 1e-10);
    CHECK(r.max_deviation_lemma3 < 1e-10);
}

TEST_CASE("too few quadrature nodes are caught by the suite") {
    // Integrands are trig polynomials of degree 4, which 4 nodes alias.
    const LemmaSuiteReport r = run_lemma_suite(20, 4, 7);
    CHECK_FALSE(r.passed);
    CHECK_THROWS_AS(lemma3_check(pauli('Z'), pauli('X'), ket0_density(), 0), ValidationError);
}

TEST_CASE("bound arithmetic") {
    const PureState zero(4);
    const PauliString z0 = PauliString::parse("ZIII");
    CHECK_THAT(theorem1_bound(1, 1, zero, z0), WithinAbs(1.0 / 8, 1e-15));
    CHECK_THAT(theorem1_bound(2, 1, zero, z0), WithinAbs(1.0 / 64, 1e-15));
    CHECK_THAT(theorem2_bound(2, 1, zero, z0), WithinAbs(0.1875, 1e-15));
    CHECK(theorem2_bound(1, 1, zero, z0) == 0.0);
    // X is mapped to Z before taking the input expectation.
    CHECK_THAT(theorem1_bound(1, 1, zero, PauliString::parse("XIII")), WithinAbs(1.0 / 8, 1e-15));
    CHECK_THAT(theorem1_bound(1, 1, MixedState::maximally_mixed(4), z0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(theorem1_bound(1, 1, MixedState::from_pure(zero), z0), WithinAbs(1.0 / 8, 1e-15));
    CHECK_THROWS_AS(theorem1_bound(1, 1, zero, PauliString::parse("IZII")), ValidationError);
    CHECK_THROWS_AS(theorem2_bound(2, 1, zero, PauliString::parse("IZII")), ValidationError);
}

TEST_CASE("monte carlo estimates clear the bounds on a small CL circuit") {
    const PauliString z0 = PauliString::parse("ZIII");
    const PureState zero(4);
    for (std::size_t blocks : {1, 2}) {
        const ParamCircuit c = build_cl_qnn(4, 1, blocks, InnerAnsatz::tensor_rotations());
        Rng rng = make_rng(11, {blocks});
        const BoundReport f = mc_expected_f_sq(c, z0, zero, 800, rng, 2);
        CHECK(f.samples == 800);
        CHECK(f.passed);
        CHECK(f.estimate > 0.0);
        CHECK(f.std_error > 0.0);
        CHECK_THAT(f.bound, WithinAbs(std::pow(8.0, -static_cast<double>(blocks)), 1e-15));
    }
    const ParamCircuit c = build_cl_qnn(4, 1, 2, InnerAnsatz::tensor_rotations());
    Rng rng = make_rng(12, {});
    const BoundReport g = mc_expected_grad_norm_sq(c, z0, zero, 300, rng);
    CHECK(g.passed);
    REQUIRE(g.restricted_estimate.has_value());
    CHECK(*g.restricted_estimate <= g.estimate + 1e-12);
    CHECK(*g.restricted_estimate >= g.bound - 3.0 * *g.restricted_std_error);
}

TEST_CASE("monte carlo results do not depend on the job count") {
    const ParamCircuit c = build_cl_qnn(4, 1, 2, InnerAnsatz::tensor_rotations());
    const PauliString z0 = PauliString::parse("ZIII");
    Rng a = make_rng(5, {});
    Rng b = make_rng(5, {});
    const BoundReport one = mc_expected_grad_norm_sq(c, z0, PureState(4), 40, a, 1);
    const BoundReport three = mc_expected_grad_norm_sq(c, z0, PureState(4), 40, b, 3);
    CHECK(one.estimate == three.estimate);
    CHECK(one.std_error == three.std_error);
}

TEST_CASE("bloch sampling statistics") {
    Rng rng = make_rng(3, {});
    const auto uniform = bloch_sample(BlochMode::UniformAngles, 100000, rng);
    const auto haar = bloch_sample(BlochMode::HaarLocal, 100000, rng);
    for (const auto &p : uniform) {
        REQUIRE_THAT(p[0] * p[0] + p[1] * p[1] + p[2] * p[2], WithinAbs(1.0, 1e-12));
    }
    CHECK_THAT(z_variance(uniform), WithinAbs(0.25, 0.01));
    CHECK_THAT(z_variance(haar), WithinAbs(1.0 / 3, 0.01));
}
