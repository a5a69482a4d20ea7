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

// Dense reference built from Kronecker products. Independent of the kernels:
// every gate becomes a full 2^N x 2^N matrix, with qubit 0 as the rightmost
// factor so that basis index bit k is qubit k.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char p) {
    Mat m(2, 2);
    const C i(0, 1);
    switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

/// factors[k] acts on qubit k.
inline Mat tensor(const std::vector<Mat> &factors) {
    Mat out = Mat::Identity(1, 1);
    for (std::size_t k = factors.size(); k-- > 0;) {
        out = kron(out, factors[k]);
    }
    return out;
}

inline Mat embed_1q(const Mat &u, std::size_t q, std::size_t n) {
    std::vector<Mat> f(n, Mat::Identity(2, 2));
    f[q] = u;
    return tensor(f);
}

/// Text form lists qubit 0 first.
inline Mat pauli_string(const std::string &s) {
    std::vector<Mat> f;
    for (char c : s) {
        f.push_back(pauli(c));
    }
    return tensor(f);
}

inline Mat rotation(char axis, double theta) {
    return std::cos(theta) * Mat::Identity(2, 2) -
           C(0, 1) * std::sin(theta) * pauli(axis);
}

inline Mat projector(int bit) {
    Mat p = Mat::Zero(2, 2);
    p(bit, bit) = 1;
    return p;
}

inline Mat cz(std::size_t a, std::size_t b, std::size_t n) {
    std::vector<Mat> f(n, Mat::Identity(2, 2));
    f[a] = projector(1);
    f[b] = pauli('Z') - Mat::Identity(2, 2);
    return Mat::Identity(1 << n, 1 << n) + tensor(f);
}

inline Mat cnot(std::size_t control, std::size_t target, std::size_t n) {
    std::vector<Mat> f0(n, Mat::Identity(2, 2));
    std::vector<Mat> f1(n, Mat::Identity(2, 2));
    f0[control] = projector(0);
    f1[control] = projector(1);
    f1[target] = pauli('X');
    return tensor(f0) + tensor(f1);
}

inline double expectation(const Mat &o, const Vec &psi) {
    return (psi.adjoint() * o * psi)(0, 0).real();
}

} // namespace oracle
