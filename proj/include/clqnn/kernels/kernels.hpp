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

#include <cstddef>
#include <cstdint>

#include "clqnn/common.hpp"

/// Amplitude kernels. Every table implements the same arithmetic in the same
/// operation order, so the per-amplitude kernels agree bit-for-bit across
/// variants (the build disables floating-point contraction). Only the
/// reductions may differ in the last bits.
namespace clqnn::kernels {

struct Mat2 {
    Complex m00, m01, m10, m11;
};

struct KernelTable {
    const char *name;
    /// amps <- (I ⊗ m ⊗ I) amps, acting on bit `target` of a 2^num_bits vector.
    void (*apply_1q)(Complex *amps, std::size_t num_bits, std::size_t target,
                     const Mat2 &m);
    void (*apply_cz)(Complex *amps, std::size_t num_bits, std::size_t a,
                     std::size_t b);
    void (*apply_cnot)(Complex *amps, std::size_t num_bits,
                       std::size_t control, std::size_t target);
    /// Two-qubit block made of one 2x2 matrix per value o of bit `other`,
    /// acting on bit `target` (t):
    ///   x_o = (a[t=0, o], a[t=1, o ^ swap_in]),  y_o = m_o x_o,
    ///   a[t=0, o] = y_o[0],  a[t=1, o ^ swap_out] = y_o[1].
    /// A single-qubit gate next to a CZ or CNOT on the same pair fits this
    /// form, so the pair costs one pass.
    void (*apply_paired)(Complex *amps, std::size_t num_bits, std::size_t target,
                         std::size_t other, const Mat2 &m0, const Mat2 &m1,
                         bool swap_in, bool swap_out);
    /// Single-qubit depolarizing map on a vectorised density matrix whose
    /// row index lives in `row_bit` and column index in `col_bit`.
    void (*depolarize)(Complex *rho, std::size_t num_bits, std::size_t row_bit,
                       std::size_t col_bit, double q);
    /// Re Σ_k conj(a[k ^ xmask]) i^ny (-1)^popcount(k & zmask) a[k].
    double (*pauli_expectation)(const Complex *amps, std::size_t num_bits,
                                std::uint64_t xmask, std::uint64_t zmask,
                                unsigned ny);
};

const KernelTable &scalar_kernels();

/// The AVX2 table, or nullptr when the build or the CPU lacks AVX2.
const KernelTable *avx2_kernels();

/// Table used by the simulators. Picks AVX2 when available unless the
/// environment variable CLQNN_KERNELS=scalar is set.
const KernelTable &active_kernels();

/// Override the active table (tests and benchmarks).
void set_active_kernels(const KernelTable &table);

/// Spreads the bits of `i` so that bit position `bit` is zero.
inline std::size_t insert_zero_bit(std::size_t i, std::size_t bit) {
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

inline std::size_t insert_two_zero_bits(std::size_t i, std::size_t lo,
                                        std::size_t hi) {
    return insert_zero_bit(insert_zero_bit(i, lo), hi);
}

} // namespace clqnn::kernels
