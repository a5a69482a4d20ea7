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
#include <cstring>
#include <random>
#include <vector>

#include "clqnn/kernels/kernels.hpp"

using namespace clqnn;
using namespace clqnn::kernels;

namespace {

std::vector<Complex> random_vector(std::size_t bits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(std::size_t{1} << bits);
    for (auto &x : v) {
        x = Complex(g(rng), g(rng));
    }
    return v;
}

bool bit_equal(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

Mat2 random_mat(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return {Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
            Complex(g(rng), g(rng))};
}

} // namespace

TEST_CASE("AVX2 kernels agree bit-for-bit with the scalar kernels") {
    const KernelTable *simd = avx2_kernels();
    if (simd == nullptr) {
        SKIP("AVX2 not available on this machine");
    }
    const KernelTable &ref = scalar_kernels();
    std::mt19937_64 rng(2024);
    for (std::size_t bits = 1; bits <= 9; ++bits) {
        for (std::size_t t = 0; t < bits; ++t) {
            auto a = random_vector(bits, rng);
            auto b = a;
            const Mat2 m = random_mat(rng);
            ref.apply_1q(a.data(), bits, t, m);
            simd->apply_1q(b.data(), bits, t, m);
            REQUIRE(bit_equal(a, b));
        }
        for (std::size_t x = 0; x < bits; ++x) {
            for (std::size_t y = 0; y < bits; ++y) {
                if (x == y) {
                    continue;
                }
                auto a = random_vector(bits, rng);
                auto b = a;
                ref.apply_cz(a.data(), bits, x, y);
                simd->apply_cz(b.data(), bits, x, y);
                REQUIRE(bit_equal(a, b));
                ref.apply_cnot(a.data(), bits, x, y);
                simd->apply_cnot(b.data(), bits, x, y);
                REQUIRE(bit_equal(a, b));
                ref.depolarize(a.data(), bits, x, y, 0.73);
                simd->depolarize(b.data(), bits, x, y, 0.73);
                REQUIRE(bit_equal(a, b));
            }
        }
        auto v = random_vector(bits, rng);
        const std::uint64_t full = (std::uint64_t{1} << bits) - 1;
        for (int trial = 0; trial < 5; ++trial) {
            const std::uint64_t xm = rng() & full;
            const std::uint64_t zm = rng() & full;
            const unsigned ny = static_cast<unsigned>(std::popcount(xm & zm));
            // Reductions are ordered differently; only the value must agree.
            const double expect = ref.pauli_expectation(v.data(), bits, xm, zm, ny);
            const double got = simd->pauli_expectation(v.data(), bits, xm, zm, ny);
            CHECK(std::abs(expect - got) <= 1e-12 * static_cast<double>(v.size()));
        }
    }
}

TEST_CASE("paired kernel agrees bit-for-bit across tables") {
    const KernelTable *simd = avx2_kernels();
    if (simd == nullptr) {
        SKIP("AVX2 not available on this machine");
    }
    const KernelTable &ref = scalar_kernels();
    std::mt19937_64 rng(77);
    for (std::size_t bits = 2; bits <= 8; ++bits) {
        for (std::size_t t = 0; t < bits; ++t) {
            for (std::size_t o = 0; o < bits; ++o) {
                if (t == o) {
                    continue;
                }
                for (int flags = 0; flags < 4; ++flags) {
                    auto a = random_vector(bits, rng);
                    auto b = a;
                    const Mat2 m0 = random_mat(rng);
                    const Mat2 m1 = random_mat(rng);
                    ref.apply_paired(a.data(), bits, t, o, m0, m1, flags & 1, flags & 2);
                    simd->apply_paired(b.data(), bits, t, o, m0, m1, flags & 1, flags & 2);
                    REQUIRE(bit_equal(a, b));
                }
            }
        }
    }
}

TEST_CASE("paired kernel reproduces a gate next to an entangler") {
    const KernelTable &k = scalar_kernels();
    std::mt19937_64 rng(5);
    const std::size_t bits = 4;
    auto close = [](const std::vector<Complex> &a, const std::vector<Complex> &b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (std::abs(a[i] - b[i]) > 1e-12) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t q = 0; q < bits; ++q) {
        for (std::size_t o = 0; o < bits; ++o) {
            if (q == o) {
                continue;
            }
            const Mat2 m = random_mat(rng);
            const Mat2 xm{m.m10, m.m11, m.m00, m.m01};
            const Mat2 mx{m.m01, m.m00, m.m11, m.m10};
            const Mat2 zm{m.m00, m.m01, -m.m10, -m.m11};
            const Mat2 mz{m.m00, -m.m01, m.m10, -m.m11};
            const auto start = random_vector(bits, rng);
            struct Case {
                bool matrix_first;
                int gate; // 0 cz(q,o), 1 cnot(o,q), 2 cnot(q,o)
                Mat2 m1;
                bool swap_in;
                bool swap_out;
            };
            const Case cases[] = {{true, 0, zm, false, false},  {false, 0, mz, false, false},
                                  {true, 1, xm, false, false},  {false, 1, mx, false, false},
                                  {true, 2, m, false, true},    {false, 2, m, true, false}};
            for (const Case &c : cases) {
                auto expect = start;
                auto apply_gate = [&] {
                    if (c.gate == 0) {
                        k.apply_cz(expect.data(), bits, q, o);
                    } else if (c.gate == 1) {
                        k.apply_cnot(expect.data(), bits, o, q);
                    } else {
                        k.apply_cnot(expect.data(), bits, q, o);
                    }
                };
                if (c.matrix_first) {
                    k.apply_1q(expect.data(), bits, q, m);
                    apply_gate();
                } else {
                    apply_gate();
                    k.apply_1q(expect.data(), bits, q, m);
                }
                auto got = start;
                k.apply_paired(got.data(), bits, q, o, m, c.m1, c.swap_in, c.swap_out);
                REQUIRE(close(expect, got));
            }
        }
    }
}

TEST_CASE("active kernel table can be overridden") {
    const KernelTable &before = active_kernels();
    set_active_kernels(scalar_kernels());
    CHECK(&active_kernels() == &scalar_kernels());
    set_active_kernels(before);
}

TEST_CASE("bit insertion helpers") {
    CHECK(insert_zero_bit(0b111, 1) == 0b1101);
    CHECK(insert_two_zero_bits(0b11, 0, 2) == 0b1010);
}
