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

#include <algorithm>
#include <utility>

#include "clqnn/kernels/kernels.hpp"
#include "kernels/scalar_ops.hpp"

namespace clqnn::kernels {
namespace {

void apply_1q_scalar(Complex *amps, std::size_t num_bits, std::size_t target,
                     const Mat2 &m) {
    const std::size_t half = std::size_t{1} << (num_bits - 1);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero_bit(i, target);
        detail::mix_pair(amps[i0], amps[i0 + stride], m);
    }
}

void apply_cz_scalar(Complex *amps, std::size_t num_bits, std::size_t a,
                     std::size_t b) {
    const auto [lo, hi] = std::minmax(a, b);
    const std::size_t both = (std::size_t{1} << lo) | (std::size_t{1} << hi);
    const std::size_t quarter = std::size_t{1} << (num_bits - 2);
    for (std::size_t i = 0; i < quarter; ++i) {
        Complex &z = amps[insert_two_zero_bits(i, lo, hi) | both];
        z = Complex(-z.real(), -z.imag());
    }
}

void apply_cnot_scalar(Complex *amps, std::size_t num_bits,
                       std::size_t control, std::size_t target) {
    const auto [lo, hi] = std::minmax(control, target);
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t quarter = std::size_t{1} << (num_bits - 2);
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t k = insert_two_zero_bits(i, lo, hi) | cbit;
        std::swap(amps[k], amps[k | tbit]);
    }
}

void apply_paired_scalar(Complex *amps, std::size_t num_bits, std::size_t target,
                         std::size_t other, const Mat2 &m0, const Mat2 &m1,
                         bool swap_in, bool swap_out) {
    const auto [lo, hi] = std::minmax(target, other);
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t obit = std::size_t{1} << other;
    const std::size_t quarter = std::size_t{1} << (num_bits - 2);
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t i00 = insert_two_zero_bits(i, lo, hi);
        const std::size_t i10 = i00 | tbit;
        const std::size_t i01 = i00 | obit;
        const std::size_t i11 = i10 | obit;
        Complex a0 = amps[i00];
        Complex b0 = amps[swap_in ? i11 : i10];
        Complex a1 = amps[i01];
        Complex b1 = amps[swap_in ? i10 : i11];
        detail::mix_pair(a0, b0, m0);
        detail::mix_pair(a1, b1, m1);
        amps[i00] = a0;
        amps[i01] = a1;
        amps[swap_out ? i11 : i10] = b0;
        amps[swap_out ? i10 : i11] = b1;
    }
}

void depolarize_scalar(Complex *rho, std::size_t num_bits, std::size_t row_bit,
                       std::size_t col_bit, double q) {
    const auto [lo, hi] = std::minmax(row_bit, col_bit);
    const std::size_t rbit = std::size_t{1} << row_bit;
    const std::size_t cbit = std::size_t{1} << col_bit;
    const double keep = 0.5 * (1.0 + q);
    const double swap = 0.5 * (1.0 - q);
    const std::size_t quarter = std::size_t{1} << (num_bits - 2);
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t k = insert_two_zero_bits(i, lo, hi);
        detail::depolarize_quad(rho[k], rho[k | rbit], rho[k | cbit],
                                rho[k | rbit | cbit], keep, swap, q);
    }
}

} // namespace

namespace detail {

double pauli_expectation_scalar(const Complex *amps, std::size_t num_bits,
                                std::uint64_t xmask, std::uint64_t zmask,
                                unsigned ny) {
    const std::size_t dim = std::size_t{1} << num_bits;
    // Signs split as (-1)^parity(k & z) = sign of the low six bits times the
    // sign of the rest; the low part comes from a table.
    const std::size_t block = dim < 64 ? dim : 64;
    double low_sign[64];
    for (std::size_t j = 0; j < block; ++j) {
        low_sign[j] = __builtin_parityll(j & zmask) != 0 ? -1.0 : 1.0;
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t base = 0; base < dim; base += block) {
        double br[4] = {0.0, 0.0, 0.0, 0.0};
        double bi[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t j = 0; j < block; ++j) {
            const std::size_t k = base + j;
            const Complex a = amps[k];
            const Complex b = amps[k ^ xmask];
            // conj(b) * a
            const double pr = b.real() * a.real() + b.imag() * a.imag();
            const double pi = b.real() * a.imag() - b.imag() * a.real();
            br[j & 3U] += low_sign[j] * pr;
            bi[j & 3U] += low_sign[j] * pi;
        }
        const double high = __builtin_parityll(base & zmask) != 0 ? -1.0 : 1.0;
        re += high * ((br[0] + br[1]) + (br[2] + br[3]));
        im += high * ((bi[0] + bi[1]) + (bi[2] + bi[3]));
    }
    // multiply by i^ny and keep the real part
    switch (ny & 3U) {
    case 0:
        return re;
    case 1:
        return -im;
    case 2:
        return -re;
    default:
        return im;
    }
}

} // namespace detail

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar",
                                   apply_1q_scalar,
                                   apply_cz_scalar,
                                   apply_cnot_scalar,
                                   apply_paired_scalar,
                                   depolarize_scalar,
                                   detail::pauli_expectation_scalar};
    return table;
}

} // namespace clqnn::kernels
