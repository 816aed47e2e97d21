// Copyright 2026 The bewit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Test-side reference implementations. Everything here is written with plain
// index loops so it shares no code path with the library.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat pauli(int i) {
    Mat m(2, 2);
    const C I(0.0, 1.0);
    switch (i) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -I, I, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// A_k, one-based.
inline Mat A(int k) {
    const int k0 = (k - 1) / 4;
    const int k1 = (k - 1) % 4;
    return 0.5 * kron(pauli(k0), pauli(k1));
}

// Tr(XY) without forming the product.
inline C trace_prod(const Mat& x, const Mat& y) {
    C acc = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) acc += x(i, j) * y(j, i);
    return acc;
}

inline C trace(const Mat& m) {
    C acc = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) acc += m(i, i);
    return acc;
}

inline Mat partial_transpose_b(const Mat& rho, int da, int db) {
    Mat out(rho.rows(), rho.cols());
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) out(i * db + j, k * db + l) = rho(i * db + l, k * db + j);
    return out;
}

inline Mat trace_out_b(const Mat& rho, int da, int db) {
    Mat out = Mat::Zero(da, da);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < da; ++k)
            for (int j = 0; j < db; ++j) out(i, k) += rho(i * db + j, k * db + j);
    return out;
}

inline Mat trace_out_a(const Mat& rho, int da, int db) {
    Mat out = Mat::Zero(db, db);
    for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
            for (int i = 0; i < da; ++i) out(j, l) += rho(i * db + j, i * db + l);
    return out;
}

inline double trace_norm(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().sum();
}

// Realignment R_{(ik),(jl)} = rho_{(ij),(kl)}; its trace norm is the CCNR value.
inline double ccnr_realigned(const Mat& rho, int da, int db) {
    Mat r(da * da, db * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) r(i * da + k, j * db + l) = rho(i * db + j, k * db + l);
    return trace_norm(r);
}

// Eigenvalues by an independent general solver (no Hermitian assumption).
inline std::vector<double> real_spectrum(const Mat& m) {
    Eigen::ComplexEigenSolver<Mat> es(m);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i).real());
    std::sort(out.begin(), out.end());
    return out;
}

inline double min_eigenvalue(const Mat& m) { return real_spectrum(m).front(); }

// t_zz = Tr(rho A_z (x) A_{P(z)}), P given one-based.
inline std::array<double, 16> diag_t(const Mat& rho, const std::array<int, 16>& perm) {
    std::array<double, 16> t{};
    for (int z = 1; z <= 16; ++z) t[z - 1] = trace_prod(rho, kron(A(z), A(perm[z - 1]))).real();
    return t;
}

inline std::array<int, 16> identity_perm() {
    std::array<int, 16> p{};
    std::iota(p.begin(), p.end(), 1);
    return p;
}

// 64 sum |t_zz|: the closed-form entangled value.
inline double q_closed_form(const Mat& rho, const std::array<int, 16>& perm) {
    double s = 0.0;
    for (double t : diag_t(rho, perm)) s += std::abs(t);
    return 64.0 * s;
}

inline Mat gaussian(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = g(rng);
            const double im = g(rng);
            m(i, j) = C(re, im);
        }
    return m;
}

// G G^dagger / Tr with a d x rank Ginibre factor.
inline Mat random_state(std::mt19937_64& rng, int d, int rank) {
    const Mat g = gaussian(rng, d, rank);
    Mat rho = g * g.adjoint();
    return rho / trace(rho).real();
}

inline Mat random_unitary(std::mt19937_64& rng, int d) {
    Eigen::HouseholderQR<Mat> qr(gaussian(rng, d, d));
    return qr.householderQ() * Mat::Identity(d, d);
}

inline Mat random_hermitian(std::mt19937_64& rng, int d) {
    const Mat g = gaussian(rng, d, d);
    return 0.5 * (g + g.adjoint());
}

inline std::array<int, 16> random_perm(std::mt19937_64& rng) {
    std::array<int, 16> p = identity_perm();
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// c(i,j) of the Pauli conjugation relations.
inline int pauli_c(int i, int j) { return (i == j || i == 0 || j == 0) ? 1 : -1; }

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
