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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clqnn {

using Complex = std::complex<double>;
using Qubit = std::size_t;

/// Largest register the dense pure-state backend accepts.
inline constexpr std::size_t kMaxPureQubits = 22;
/// Largest register the density-matrix backend accepts.
inline constexpr std::size_t kMaxMixedQubits = 10;

enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

char axis_name(Axis axis);
Axis parse_axis(char c);

// Error taxonomy. Index errors reuse std::out_of_range.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidGateError : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

class DataError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

inline void check_qubit(Qubit q, std::size_t num_qubits) {
    if (q >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(q) +
                                " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
}

} // namespace clqnn
