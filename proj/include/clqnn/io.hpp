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

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "clqnn/circuit.hpp"
#include "clqnn/experiments.hpp"
#include "clqnn/optimizers.hpp"
#include "clqnn/pauli.hpp"
#include "clqnn/theory.hpp"

namespace clqnn {

using Json = nlohmann::ordered_json;

/// Round-trip decimal form ("%.17g") used by every CSV writer.
std::string format_double(double v);

Json to_json(const Hamiltonian &h);
Json to_json(const ParamCircuit &c);
Json to_json(const GateBudget &b);
Json to_json(const BoundReport &r);
Json to_json(const LemmaSuiteReport &r);

Hamiltonian hamiltonian_from_json(const Json &j);
ParamCircuit circuit_from_json(const Json &j);

/// iteration,loss,grad_norm,test_error,exact_loss; optional columns left blank.
void write_records_csv(std::ostream &out, std::span<const RunRecord> records);
/// Long format: n,ansatz,round,f_sq,grad_sq
void write_toy_samples_csv(std::ostream &out, std::span<const ToySample> samples);
/// One row per (n, ansatz) with means, standard errors, medians and bounds.
void write_toy_rows_csv(std::ostream &out, std::span<const ToyRow> rows);
/// x,y,z
void write_bloch_csv(std::ostream &out, std::span<const BlochVector> points);

/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace clqnn
