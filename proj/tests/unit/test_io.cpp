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
#include <sstream>

#include "clqnn/common.hpp"
#include "clqnn/io.hpp"
#include "clqnn/rng.hpp"

using namespace clqnn;

TEST_CASE("format_double round trips") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.0) == "-2");
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("hamiltonian json round trip") {
    const auto h = ising_hamiltonian(3);
    const Json j = to_json(h);
    CHECK(j["n"] == 3);
    CHECK(j["terms"].size() == h.terms().size());
    const auto back = hamiltonian_from_json(Json::parse(j.dump()));
    REQUIRE(back.terms().size() == h.terms().size());
    for (std::size_t i = 0; i < h.terms().size(); ++i) {
        CHECK(back.terms()[i].coeff == h.terms()[i].coeff);
        CHECK(back.terms()[i].pauli.to_string() == h.terms()[i].pauli.to_string());
    }
    CHECK_THROWS_AS(hamiltonian_from_json(Json{{"n", 2}}), ConfigError);
}

TEST_CASE("circuit json round trip") {
    auto rng = make_rng(5, {});
    const auto c = build_he_ansatz(3, 2);
    const auto back = circuit_from_json(Json::parse(to_json(c).dump()));
    CHECK(back.param_count() == c.param_count());
    CHECK(back.layer_marks() == c.layer_marks());
    CHECK(to_json(back) == to_json(c));

    const auto theta = init_uniform(c.param_count(), rng);
    const auto a = run(c, theta, PureState::basis(3, 0));
    const auto b = run(back, theta, PureState::basis(3, 0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        CHECK(a.amplitudes()[i] == b.amplitudes()[i]);
    }
}

TEST_CASE("circuit json with fixed angles and errors") {
    const Json j = Json::parse(R"({"n":2,"ops":[
        {"kind":"rotation","qubits":[0],"axis":"Y","angle":0.25},
        {"kind":"cnot","qubits":[0,1]},
        {"kind":"rotation","qubits":[1],"axis":"X","slot":0}],
        "layer_marks":[1,2,3]})");
    const auto c = circuit_from_json(j);
    CHECK(c.param_count() == 1);
    CHECK(std::get<RotationOp>(c.ops()[0]).angle == 0.25);
    CHECK(std::get<CnotOp>(c.ops()[1]).target == 1);

    Json bad = j;
    bad["ops"][1]["kind"] = "swap";
    CHECK_THROWS_AS(circuit_from_json(bad), ConfigError);
    bad = j;
    bad["ops"][1]["qubits"] = {0};
    CHECK_THROWS_AS(circuit_from_json(bad), ConfigError);
    bad = j;
    bad["ops"][0]["axis"] = "XY";
    CHECK_THROWS_AS(circuit_from_json(bad), ConfigError);
}

TEST_CASE("report json") {
    BoundReport r{0.25, 0.01, 0.125, 100, true, 0.2, 0.02};
    const Json j = to_json(r);
    CHECK(j["bound"] == 0.125);
    CHECK(j["restricted_estimate"] == 0.2);
    r.restricted_estimate.reset();
    r.restricted_std_error.reset();
    CHECK_FALSE(to_json(r).contains("restricted_estimate"));

    const Json g = to_json(GateBudget{10, 4, 0});
    CHECK(g.dump() == R"({"n_1q":10,"n_cz":4,"n_cnot":0})");

    const Json l = to_json(LemmaSuiteReport{400, 1e-15, 2e-15, true});
    CHECK(l["instances"] == 400);
    CHECK(l["passed"] == true);
}

TEST_CASE("records csv leaves missing cells blank") {
    std::vector<RunRecord> recs(2);
    recs[0] = {0, 1.5, 0.25, std::nullopt, -0.5};
    recs[1] = {1, 1.0, 0.125, 0.1, std::nullopt};
    std::ostringstream out;
    write_records_csv(out, recs);
    CHECK(out.str() ==
          "iteration,loss,grad_norm,test_error,exact_loss\n"
          "0,1.5,0.25,,-0.5\n"
          "1,1,0.125,0.10000000000000001,\n");
}

TEST_CASE("toy and bloch csv") {
    std::vector<ToySample> s{{4, Ansatz::CL, 0, 0.5, std::nullopt}, {4, Ansatz::HE, 1, 0.25, 2.0}};
    std::ostringstream out;
    write_toy_samples_csv(out, s);
    CHECK(out.str() == "n,ansatz,round,f_sq,grad_sq\n4,cl,0,0.5,\n4,he,1,0.25,2\n");

    ToyRow row{};
    row.num_qubits = 3;
    row.ansatz = Ansatz::Random;
    row.rounds = 2;
    row.params = 9;
    row.mean_f_sq = 1.0;
    std::ostringstream rows;
    write_toy_rows_csv(rows, std::span<const ToyRow>(&row, 1));
    const auto text = rows.str();
    CHECK(text.substr(text.find('\n') + 1) == "3,random,2,9,1,0,0,,,,,\n");

    std::vector<BlochVector> pts{{0.0, 0.5, -1.0}};
    std::ostringstream b;
    write_bloch_csv(b, pts);
    CHECK(b.str() == "x,y,z\n0,0.5,-1\n");
}
