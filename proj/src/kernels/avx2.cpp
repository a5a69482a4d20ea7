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

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check for both.

#include "clqnn/kernels/kernels.hpp"
#include "kernels/scalar_ops.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace clqnn::kernels {
namespace {

struct CoeffPair {
    __m256d re;
    __m256d im;
};

inline CoeffPair broadcast(const Complex &c) {
    return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
}

// Two different coefficients, one per 128-bit half (low half = first).
inline CoeffPair split(const Complex &first, const Complex &second) {
    return {_mm256_set_pd(second.real(), second.real(), first.real(),
                          first.real()),
            _mm256_set_pd(second.imag(), second.imag(), first.imag(),
                          first.imag())};
}

inline __m256d swap_parts(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// c0 x0 + c1 x1 per complex lane; xs = x with real and imaginary parts swapped.
// Same rounding sequence as detail::mix_row.
inline __m256d mix_row(const CoeffPair &c0, __m256d x0, __m256d x0s,
                       const CoeffPair &c1, __m256d x1, __m256d x1s) {
    const __m256d t = _mm256_fmadd_pd(c1.re, x1, _mm256_mul_pd(c0.re, x0));
    const __m256d s = _mm256_fmadd_pd(c1.im, x1s, _mm256_mul_pd(c0.im, x0s));
    return _mm256_addsub_pd(t, s);
}

inline __m256d mix_row(const CoeffPair &c0, __m256d x0, const CoeffPair &c1, __m256d x1) {
    return mix_row(c0, x0, swap_parts(x0), c1, x1, swap_parts(x1));
}

inline __m256d swap_halves(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x01); }

// One vector holds (x0, x1) of a single pair; returns (row 0, row 1).
inline __m256d apply_low_target(const CoeffPair &first, const CoeffPair &second, __m256d x) {
    const __m256d lo = _mm256_permute2f128_pd(x, x, 0x00);
    const __m256d hi = _mm256_permute2f128_pd(x, x, 0x11);
    return mix_row(first, lo, second, hi);
}

inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

// Calls body(p) for every aligned amplitude pair p[0], p[1] whose indices have
// bits lo and hi clear (1 <= lo < hi).
template <typename Body>
inline void for_each_pair_block(Complex *amps, std::size_t num_bits, std::size_t lo,
                                std::size_t hi, Body body) {
    const std::size_t dim = std::size_t{1} << num_bits;
    const std::size_t lo_size = std::size_t{1} << lo;
    const std::size_t hi_size = std::size_t{1} << hi;
    for (std::size_t outer = 0; outer < dim; outer += 2 * hi_size) {
        for (std::size_t mid = outer; mid < outer + hi_size; mid += 2 * lo_size) {
            Complex *p = amps + mid;
            for (std::size_t k = 0; k < lo_size; k += 2, p += 2) {
                body(p);
            }
        }
    }
}

void apply_1q_avx2(Complex *amps, std::size_t num_bits, std::size_t target,
                   const Mat2 &m) {
    const std::size_t dim = std::size_t{1} << num_bits;
    if (target == 0) {
        const CoeffPair first = split(m.m00, m.m10);
        const CoeffPair second = split(m.m01, m.m11);
        for (std::size_t k = 0; k < dim; k += 2) {
            store2(amps + k, apply_low_target(first, second, load2(amps + k)));
        }
        return;
    }
    const CoeffPair c00 = broadcast(m.m00);
    const CoeffPair c01 = broadcast(m.m01);
    const CoeffPair c10 = broadcast(m.m10);
    const CoeffPair c11 = broadcast(m.m11);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            const __m256d v0 = load2(amps + i);
            const __m256d v1 = load2(amps + i + stride);
            const __m256d s0 = swap_parts(v0);
            const __m256d s1 = swap_parts(v1);
            store2(amps + i, mix_row(c00, v0, s0, c01, v1, s1));
            store2(amps + i + stride, mix_row(c10, v0, s0, c11, v1, s1));
        }
    }
}

void apply_cz_avx2(Complex *amps, std::size_t num_bits, std::size_t a,
                   std::size_t b) {
    const std::size_t lo = a < b ? a : b;
    const std::size_t hi = a < b ? b : a;
    if (lo == 0) {
        scalar_kernels().apply_cz(amps, num_bits, a, b);
        return;
    }
    const std::size_t both = (std::size_t{1} << lo) | (std::size_t{1} << hi);
    const __m256d sign = _mm256_set1_pd(-0.0);
    for_each_pair_block(amps, num_bits, lo, hi, [&](Complex *p) {
        store2(p + both, _mm256_xor_pd(load2(p + both), sign));
    });
}

void apply_cnot_avx2(Complex *amps, std::size_t num_bits, std::size_t control,
                     std::size_t target) {
    const std::size_t lo = control < target ? control : target;
    const std::size_t hi = control < target ? target : control;
    if (lo == 0) {
        scalar_kernels().apply_cnot(amps, num_bits, control, target);
        return;
    }
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for_each_pair_block(amps, num_bits, lo, hi, [&](Complex *p) {
        const __m256d x = load2(p + cbit);
        const __m256d y = load2(p + cbit + tbit);
        store2(p + cbit, y);
        store2(p + cbit + tbit, x);
    });
}

// Both bits at 1 or above: every load covers two amplitudes of one block.
template <bool SwapIn, bool SwapOut>
void paired_block(Complex *amps, std::size_t quarter, std::size_t lo, std::size_t hi,
                  std::size_t tbit, std::size_t obit, const Mat2 &m0, const Mat2 &m1) {
    const CoeffPair a00 = broadcast(m0.m00);
    const CoeffPair a01 = broadcast(m0.m01);
    const CoeffPair a10 = broadcast(m0.m10);
    const CoeffPair a11 = broadcast(m0.m11);
    const CoeffPair b00 = broadcast(m1.m00);
    const CoeffPair b01 = broadcast(m1.m01);
    const CoeffPair b10 = broadcast(m1.m10);
    const CoeffPair b11 = broadcast(m1.m11);
    const std::size_t dim = quarter << 2;
    const std::size_t lo_size = std::size_t{1} << lo;
    const std::size_t hi_size = std::size_t{1} << hi;
    for (std::size_t outer = 0; outer < dim; outer += 2 * hi_size) {
        for (std::size_t mid = outer; mid < outer + hi_size; mid += 2 * lo_size) {
            Complex *p = amps + mid;
            for (std::size_t k = 0; k < lo_size; k += 2, p += 2) {
                const __m256d v00 = load2(p);
                const __m256d v10 = load2(p + tbit);
                const __m256d v01 = load2(p + obit);
                const __m256d v11 = load2(p + tbit + obit);
                const __m256d x0b = SwapIn ? v11 : v10;
                const __m256d x1b = SwapIn ? v10 : v11;
                const __m256d s00 = swap_parts(v00);
                const __m256d s01 = swap_parts(v01);
                const __m256d s0b = swap_parts(x0b);
                const __m256d s1b = swap_parts(x1b);
                store2(p, mix_row(a00, v00, s00, a01, x0b, s0b));
                store2(p + obit, mix_row(b00, v01, s01, b01, x1b, s1b));
                store2(p + (SwapOut ? tbit + obit : tbit),
                       mix_row(a10, v00, s00, a11, x0b, s0b));
                store2(p + (SwapOut ? tbit : tbit + obit),
                       mix_row(b10, v01, s01, b11, x1b, s1b));
            }
        }
    }
}

void apply_paired_avx2(Complex *amps, std::size_t num_bits, std::size_t target,
                       std::size_t other, const Mat2 &m0, const Mat2 &m1, bool swap_in,
                       bool swap_out) {
    const std::size_t lo = target < other ? target : other;
    const std::size_t hi = target < other ? other : target;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t obit = std::size_t{1} << other;
    const std::size_t quarter = std::size_t{1} << (num_bits - 2);
    const std::size_t dim = quarter << 2;
    const std::size_t hi_size = std::size_t{1} << hi;
    if (target == 0) {
        const CoeffPair f0 = split(m0.m00, m0.m10);
        const CoeffPair s0 = split(m0.m01, m0.m11);
        const CoeffPair f1 = split(m1.m00, m1.m10);
        const CoeffPair s1 = split(m1.m01, m1.m11);
        for (std::size_t outer = 0; outer < dim; outer += 2 * hi_size) {
            for (std::size_t k = outer; k < outer + hi_size; k += 2) {
                const __m256d v0 = load2(amps + k);
                const __m256d v1 = load2(amps + (k | obit));
                const __m256d x0 = swap_in ? _mm256_blend_pd(v0, v1, 0xC) : v0;
                const __m256d x1 = swap_in ? _mm256_blend_pd(v1, v0, 0xC) : v1;
                const __m256d y0 = apply_low_target(f0, s0, x0);
                const __m256d y1 = apply_low_target(f1, s1, x1);
                store2(amps + k, swap_out ? _mm256_blend_pd(y0, y1, 0xC) : y0);
                store2(amps + (k | obit), swap_out ? _mm256_blend_pd(y1, y0, 0xC) : y1);
            }
        }
        return;
    }
    if (other == 0) {
        const CoeffPair c00 = split(m0.m00, m1.m00);
        const CoeffPair c01 = split(m0.m01, m1.m01);
        const CoeffPair c10 = split(m0.m10, m1.m10);
        const CoeffPair c11 = split(m0.m11, m1.m11);
        for (std::size_t outer = 0; outer < dim; outer += 2 * hi_size) {
            for (std::size_t k = outer; k < outer + hi_size; k += 2) {
                const __m256d w0 = load2(amps + k);
                const __m256d w1 = load2(amps + (k | tbit));
                const __m256d x1 = swap_in ? swap_halves(w1) : w1;
                const __m256d w0s = swap_parts(w0);
                const __m256d x1s = swap_parts(x1);
                const __m256d row0 = mix_row(c00, w0, w0s, c01, x1, x1s);
                const __m256d row1 = mix_row(c10, w0, w0s, c11, x1, x1s);
                store2(amps + k, row0);
                store2(amps + (k | tbit), swap_out ? swap_halves(row1) : row1);
            }
        }
        return;
    }
    if (swap_in) {
        swap_out ? paired_block<true, true>(amps, quarter, lo, hi, tbit, obit, m0, m1)
                 : paired_block<true, false>(amps, quarter, lo, hi, tbit, obit, m0, m1);
    } else {
        swap_out ? paired_block<false, true>(amps, quarter, lo, hi, tbit, obit, m0, m1)
                 : paired_block<false, false>(amps, quarter, lo, hi, tbit, obit, m0, m1);
    }
}

void depolarize_avx2(Complex *rho, std::size_t num_bits, std::size_t row_bit,
                     std::size_t col_bit, double q) {
    const std::size_t lo = row_bit < col_bit ? row_bit : col_bit;
    const std::size_t hi = row_bit < col_bit ? col_bit : row_bit;
    if (lo == 0) {
        scalar_kernels().depolarize(rho, num_bits, row_bit, col_bit, q);
        return;
    }
    const std::size_t rbit = std::size_t{1} << row_bit;
    const std::size_t cbit = std::size_t{1} << col_bit;
    const __m256d keep = _mm256_set1_pd(0.5 * (1.0 + q));
    const __m256d swap = _mm256_set1_pd(0.5 * (1.0 - q));
    const __m256d scale = _mm256_set1_pd(q);
    const std::size_t quarter = std::size_t{1} << (num_bits - 2);
    for (std::size_t i = 0; i < quarter; i += 2) {
        const std::size_t k = insert_two_zero_bits(i, lo, hi);
        const __m256d d0 = load2(rho + k);
        const __m256d d1 = load2(rho + (k | rbit | cbit));
        store2(rho + k, _mm256_add_pd(_mm256_mul_pd(keep, d0),
                                      _mm256_mul_pd(swap, d1)));
        store2(rho + (k | rbit | cbit),
               _mm256_add_pd(_mm256_mul_pd(swap, d0),
                             _mm256_mul_pd(keep, d1)));
        store2(rho + (k | rbit), _mm256_mul_pd(scale, load2(rho + (k | rbit))));
        store2(rho + (k | cbit), _mm256_mul_pd(scale, load2(rho + (k | cbit))));
    }
}

double pauli_expectation_avx2(const Complex *amps, std::size_t num_bits,
                              std::uint64_t xmask, std::uint64_t zmask, unsigned ny) {
    constexpr std::size_t kBlock = 64;
    const std::size_t dim = std::size_t{1} << num_bits;
    if (dim < kBlock) {
        return detail::pauli_expectation_scalar(amps, num_bits, xmask, zmask, ny);
    }
    alignas(32) double low_sign[2 * kBlock];
    for (std::size_t j = 0; j < kBlock; ++j) {
        const double s = __builtin_parityll(j & zmask) != 0 ? -1.0 : 1.0;
        low_sign[2 * j] = s;
        low_sign[2 * j + 1] = s;
    }
    // Amplitude k pairs with k ^ x; for an even k the partner pair starts at
    // k ^ (x & ~1) and comes in reversed order when bit 0 of x is set.
    const bool reversed = (xmask & 1U) != 0;
    const std::size_t shift = xmask & ~std::uint64_t{1};
    auto partner = [&](std::size_t k) {
        const __m256d b = load2(amps + (k ^ shift));
        return reversed ? swap_halves(b) : b;
    };
    __m256d re_tot = _mm256_setzero_pd();
    __m256d im_tot = _mm256_setzero_pd();
    for (std::size_t base = 0; base < dim; base += kBlock) {
        __m256d r0 = _mm256_setzero_pd();
        __m256d r1 = _mm256_setzero_pd();
        __m256d i0 = _mm256_setzero_pd();
        __m256d i1 = _mm256_setzero_pd();
        for (std::size_t j = 0; j < kBlock; j += 4) {
            const std::size_t k = base + j;
            const __m256d a0 = load2(amps + k);
            const __m256d a1 = load2(amps + k + 2);
            const __m256d b0 = partner(k);
            const __m256d b1 = partner(k + 2);
            const __m256d s0 = _mm256_load_pd(low_sign + 2 * j);
            const __m256d s1 = _mm256_load_pd(low_sign + 2 * j + 4);
            // lanes (br ar, bi ai) and (br ai, bi ar)
            r0 = _mm256_fmadd_pd(s0, _mm256_mul_pd(b0, a0), r0);
            r1 = _mm256_fmadd_pd(s1, _mm256_mul_pd(b1, a1), r1);
            i0 = _mm256_fmadd_pd(s0, _mm256_mul_pd(b0, swap_parts(a0)), i0);
            i1 = _mm256_fmadd_pd(s1, _mm256_mul_pd(b1, swap_parts(a1)), i1);
        }
        const __m256d high =
            _mm256_set1_pd(__builtin_parityll(base & zmask) != 0 ? -1.0 : 1.0);
        re_tot = _mm256_fmadd_pd(high, _mm256_add_pd(r0, r1), re_tot);
        im_tot = _mm256_fmadd_pd(high, _mm256_add_pd(i0, i1), im_tot);
    }
    alignas(32) double r[4];
    alignas(32) double i[4];
    _mm256_store_pd(r, re_tot);
    _mm256_store_pd(i, im_tot);
    const double re = (r[0] + r[1]) + (r[2] + r[3]);
    const double im = (i[0] - i[1]) + (i[2] - i[3]);
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

} // namespace

const KernelTable *avx2_kernels_compiled() {
    static const KernelTable table{"avx2",
                                   apply_1q_avx2,
                                   apply_cz_avx2,
                                   apply_cnot_avx2,
                                   apply_paired_avx2,
                                   depolarize_avx2,
                                   pauli_expectation_avx2};
    return &table;
}

} // namespace clqnn::kernels

#else

namespace clqnn::kernels {
const KernelTable *avx2_kernels_compiled() { return nullptr; }
} // namespace clqnn::kernels

#endif
