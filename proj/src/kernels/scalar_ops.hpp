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

#include <cmath>

#include "clqnn/kernels/kernels.hpp"

// Scalar building blocks shared by the reference kernels and the scalar
// tails of the vector kernels. Keep the operation order in sync with the
// vector code: for y = c0 x0 + c1 x1,
//   re = fma(c1r, x1r, c0r x0r) - fma(c1i, x1i, c0i x0i)
//   im = fma(c1r, x1i, c0r x0i) + fma(c1i, x1r, c0i x0r)
namespace clqnn::kernels::detail {

inline Complex mix_row(const Complex &c0, const Complex &x0, const Complex &c1,
                       const Complex &x1) {
    const double re = std::fma(c1.real(), x1.real(), c0.real() * x0.real()) -
                      std::fma(c1.imag(), x1.imag(), c0.imag() * x0.imag());
    const double im = std::fma(c1.real(), x1.imag(), c0.real() * x0.imag()) +
                      std::fma(c1.imag(), x1.real(), c0.imag() * x0.real());
    return {re, im};
}

inline void mix_pair(Complex &x0, Complex &x1, const Mat2 &m) {
    const Complex y0 = mix_row(m.m00, x0, m.m01, x1);
    const Complex y1 = mix_row(m.m10, x0, m.m11, x1);
    x0 = y0;
    x1 = y1;
}

inline void depolarize_quad(Complex &d0, Complex &off_r, Complex &off_c,
                            Complex &d1, double keep, double swap, double q) {
    const Complex a = d0;
    const Complex b = d1;
    d0 = Complex(keep * a.real() + swap * b.real(),
                 keep * a.imag() + swap * b.imag());
    d1 = Complex(swap * a.real() + keep * b.real(),
                 swap * a.imag() + keep * b.imag());
    off_r = Complex(q * off_r.real(), q * off_r.imag());
    off_c = Complex(q * off_c.real(), q * off_c.imag());
}

double pauli_expectation_scalar(const Complex *amps, std::size_t num_bits,
                                std::uint64_t xmask, std::uint64_t zmask,
                                unsigned ny);

} // namespace clqnn::kernels::detail
