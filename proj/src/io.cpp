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

#include "clqnn/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clqnn/common.hpp"

namespace clqnn {

namespace {

std::string optional_cell(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string();
}

std::string axis_text(Axis a) { return std::string(1, axis_name(a)); }

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const Hamiltonian &h) {
    Json terms = Json::array();
    for (const auto &t : h.terms()) {
        terms.push_back({{"coeff", t.coeff}, {"pauli", t.pauli.to_string()}});
    }
    return {{"n", h.num_qubits()}, {"terms", terms}};
}

Json to_json(const ParamCircuit &c) {
    Json ops = Json::array();
    for (const GateOp &op : c.ops()) {
        if (const auto *r = std::get_if<RotationOp>(&op)) {
            Json o{{"kind", "rotation"}, {"qubits", {r->qubit}}, {"axis", axis_text(r->axis)}};
            if (r->slot) {
                o["slot"] = *r->slot;
            } else {
                o["angle"] = r->angle;
            }
            ops.push_back(o);
        } else if (const auto *z = std::get_if<CzOp>(&op)) {
            ops.push_back({{"kind", "cz"}, {"qubits", {z->a, z->b}}});
        } else {
            const auto &x = std::get<CnotOp>(op);
            ops.push_back({{"kind", "cnot"}, {"qubits", {x.control, x.target}}});
        }
    }
    return {{"n", c.num_qubits()}, {"ops", ops}, {"layer_marks", c.layer_marks()}};
}

Json to_json(const GateBudget &b) {
    return {{"n_1q", b.n_1q}, {"n_cz", b.n_cz}, {"n_cnot", b.n_cnot}};
}

Json to_json(const BoundReport &r) {
    Json j{{"estimate", r.estimate},
           {"std_error", r.std_error},
           {"bound", r.bound},
           {"samples", r.samples},
           {"passed", r.passed}};
    if (r.restricted_estimate) {
        j["restricted_estimate"] = *r.restricted_estimate;
        j["restricted_std_error"] = *r.restricted_std_error;
    }
    return j;
}

Json to_json(const LemmaSuiteReport &r) {
    return {{"instances", r.instances},
            {"max_deviation_lemma2", r.max_deviation_lemma2},
            {"max_deviation_lemma3", r.max_deviation_lemma3},
            {"passed", r.passed}};
}

Hamiltonian hamiltonian_from_json(const Json &j) {
    try {
        Hamiltonian h(j.at("n").get<std::size_t>());
        for (const auto &t : j.at("terms")) {
            h.add_term(t.at("coeff").get<double>(),
                       PauliString::parse(t.at("pauli").get<std::string>()));
        }
        return h;
    } catch (const Json::exception &e) {
        throw ConfigError(std::string("bad Hamiltonian JSON: ") + e.what());
    }
}

ParamCircuit circuit_from_json(const Json &j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<GateOp> ops;
        for (const auto &o : j.at("ops")) {
            const auto kind = o.at("kind").get<std::string>();
            const auto q = o.at("qubits").get<std::vector<std::size_t>>();
            const auto need = [&](std::size_t count) {
                if (q.size() != count) {
                    throw ConfigError(kind + " expects " + std::to_string(count) + " qubits");
                }
            };
            if (kind == "rotation") {
                need(1);
                const auto axis = o.at("axis").get<std::string>();
                if (axis.size() != 1) {
                    throw ConfigError("axis must be X, Y or Z");
                }
                RotationOp r{parse_axis(axis[0]), q[0], std::nullopt, 0.0};
                if (o.contains("slot")) {
                    r.slot = o["slot"].get<std::size_t>();
                } else {
                    r.angle = o.at("angle").get<double>();
                }
                ops.emplace_back(r);
            } else if (kind == "cz") {
                need(2);
                ops.emplace_back(CzOp{q[0], q[1]});
            } else if (kind == "cnot") {
                need(2);
                ops.emplace_back(CnotOp{q[0], q[1]});
            } else {
                throw ConfigError("unknown op kind '" + kind + "'");
            }
        }
        return ParamCircuit(n, std::move(ops),
                            j.at("layer_marks").get<std::vector<std::size_t>>());
    } catch (const Json::exception &e) {
        throw ConfigError(std::string("bad circuit JSON: ") + e.what());
    }
}

void write_records_csv(std::ostream &out, std::span<const RunRecord> records) {
    out << "iteration,loss,grad_norm,test_error,exact_loss\n";
    for (const auto &r : records) {
        out << r.iteration << ',' << format_double(r.loss) << ',' << format_double(r.grad_norm)
            << ',' << optional_cell(r.test_error) << ',' << optional_cell(r.exact_loss) << '\n';
    }
}

void write_toy_samples_csv(std::ostream &out, std::span<const ToySample> samples) {
    out << "n,ansatz,round,f_sq,grad_sq\n";
    for (const auto &s : samples) {
        out << s.num_qubits << ',' << ansatz_name(s.ansatz) << ',' << s.round << ','
            << format_double(s.f_sq) << ',' << optional_cell(s.grad_sq) << '\n';
    }
}

void write_toy_rows_csv(std::ostream &out, std::span<const ToyRow> rows) {
    out << "n,ansatz,rounds,params,mean_f_sq,stderr_f_sq,median_f_sq,mean_grad_sq,"
           "stderr_grad_sq,median_grad_sq,bound_f_sq,bound_grad_sq\n";
    for (const auto &r : rows) {
        out << r.num_qubits << ',' << ansatz_name(r.ansatz) << ',' << r.rounds << ','
            << r.params << ',' << format_double(r.mean_f_sq) << ','
            << format_double(r.stderr_f_sq) << ',' << format_double(r.median_f_sq) << ','
            << optional_cell(r.mean_grad_sq) << ',' << optional_cell(r.stderr_grad_sq) << ','
            << optional_cell(r.median_grad_sq) << ',' << optional_cell(r.bound_f_sq) << ','
            << optional_cell(r.bound_grad_sq) << '\n';
    }
}

void write_bloch_csv(std::ostream &out, std::span<const BlochVector> points) {
    out << "x,y,z\n";
    for (const auto &p : points) {
        out << format_double(p[0]) << ',' << format_double(p[1]) << ',' << format_double(p[2])
            << '\n';
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw DataError("write to '" + path.string() + "' failed");
    }
}

} // namespace clqnn
