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


#include "bewit/matops.hpp"

#include <random>

#include "gtest/gtest.h"

#include "bewit/basis.hpp"
#include "bewit/criteria.hpp"
#include "bewit/errors.hpp"
#include "bewit/states.hpp"
#include "oracles.hpp"

using namespace bewit;

namespace {

ComplexMatrix diag(std::initializer_list<double> d) {
    RealVector v(static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double x : d) v(i++) = x;
    return v.cast<Complex>().asDiagonal();
}

}  // namespace

TEST(matops, kron_examples) {
    EXPECT_EQ(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
              ComplexMatrix(ComplexMatrix::Identity(4, 4)));

    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 2) = 1.0;
    expected(1, 3) = -1.0;
    expected(2, 0) = 1.0;
    expected(3, 1) = -1.0;
    EXPECT_EQ(kron(oracle::pauli(1), oracle::pauli(3)), expected);

    std::mt19937_64 rng(1);
    const ComplexMatrix a = oracle::gaussian(rng, 3, 3);
    const ComplexMatrix b = oracle::gaussian(rng, 3, 3);
    EXPECT_LT(std::abs(kron(a, b).trace() - a.trace() * b.trace()), 1e-12);
}

TEST(matops, kron_matches_loops_and_is_associative) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::gaussian(rng, 2, 3);
        const ComplexMatrix b = oracle::gaussian(rng, 3, 2);
        const ComplexMatrix c = oracle::gaussian(rng, 2, 2);
        EXPECT_LT(oracle::max_abs_diff(kron(a, b), oracle::kron(a, b)), 1e-15);
        EXPECT_LT(oracle::max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    }
}

TEST(matops, hermitian_eig_examples) {
    EXPECT_LT((hermitian_eig(diag({3, 1, 2})).values - RealVector::LinSpaced(3, 1, 3)).norm(),
              1e-14);

    const RealVector x = hermitian_eigenvalues(oracle::pauli(1));
    EXPECT_NEAR(x(0), -1.0, 1e-14);
    EXPECT_NEAR(x(1), 1.0, 1e-14);

    // werner(1) is P_as / 6.
    const RealVector w = hermitian_eigenvalues(werner(1.0).matrix());
    for (int i = 0; i < 10; ++i) EXPECT_NEAR(w(i), 0.0, 1e-12);
    for (int i = 10; i < 16; ++i) EXPECT_NEAR(w(i), 1.0 / 6.0, 1e-12);
}

TEST(matops, hermitian_eig_reconstruction) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = oracle::random_hermitian(rng, 16);
        const HermitianEigen e = hermitian_eig(m);
        for (Eigen::Index j = 1; j < e.values.size(); ++j) EXPECT_LE(e.values(j - 1), e.values(j));
        const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LT(oracle::max_abs_diff(back, m), 1e-9);
        EXPECT_TRUE(is_unitary(e.vectors, 1e-9));
        for (Eigen::Index j = 0; j < 16; ++j) {
            EXPECT_LT((m * e.vectors.col(j) - e.values(j) * e.vectors.col(j)).norm(), 1e-9);
        }
    }
}

TEST(matops, hermitian_eig_rejects_non_hermitian) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(hermitian_eig(m), NotHermitian);
    EXPECT_THROW(hermitian_eigenvalues(m), NotHermitian);
    EXPECT_THROW(hermitian_eig(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
    // Below the 1e-10 threshold it goes through.
    ComplexMatrix nearly = ComplexMatrix::Identity(2, 2);
    nearly(0, 1) = 1e-12;
    EXPECT_NO_THROW(hermitian_eig(nearly));
}

TEST(matops, trace_norm_examples) {
    EXPECT_EQ(trace_norm(ComplexMatrix(ComplexMatrix::Zero(3, 3))), 0.0);
    EXPECT_NEAR(trace_norm(diag({1, -2, 3})), 6.0, 1e-14);
    const CorrelationTensor t = correlation_tensor(max_entangled(4), product_basis());
    EXPECT_NEAR(trace_norm(t), 4.0, 1e-12);
}

TEST(matops, trace_norm_unitary_invariance) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = oracle::gaussian(rng, 5, 5);
        const ComplexMatrix u = oracle::random_unitary(rng, 5);
        const ComplexMatrix w = oracle::random_unitary(rng, 5);
        EXPECT_NEAR(trace_norm(ComplexMatrix(u * m * w)), trace_norm(m), 1e-9);
        EXPECT_NEAR(trace_norm(m), oracle::trace_norm(m), 1e-10);
    }
    const RealMatrix r = RealMatrix::Random(4, 6);
    EXPECT_NEAR(trace_norm(r), oracle::trace_norm(r.cast<Complex>()), 1e-12);
    EXPECT_EQ(singular_values(r).size(), 4);
}

TEST(matops, partial_transpose_examples) {
    std::mt19937_64 rng(5);
    const ComplexMatrix ra = oracle::random_state(rng, 4, 4);
    ComplexMatrix rb = oracle::random_state(rng, 4, 4);
    rb = rb.real().cast<Complex>();  // real symmetric
    EXPECT_LT(oracle::max_abs_diff(partial_transpose(kron(ra, rb), 4, 4), kron(ra, rb.transpose())),
              1e-15);

    const ComplexMatrix pt = partial_transpose(max_entangled(4).matrix(), 4, 4);
    EXPECT_NEAR(hermitian_eigenvalues(pt)(0), -0.25, 1e-12);
    EXPECT_NEAR(oracle::min_eigenvalue(pt), -0.25, 1e-12);
}

TEST(matops, partial_transpose_properties) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix rho = oracle::random_state(rng, 12, 5);
        const ComplexMatrix pt = partial_transpose(rho, 3, 4);
        EXPECT_EQ(pt, oracle::partial_transpose_b(rho, 3, 4));
        EXPECT_LT(oracle::max_abs_diff(partial_transpose(pt, 3, 4), rho), 1e-14);
        // Entries are only moved around, so trace and Hermiticity survive exactly.
        EXPECT_EQ(pt.trace(), rho.trace());
        EXPECT_LE(hermiticity_defect(pt), hermiticity_defect(rho));
    }
    EXPECT_THROW(partial_transpose(ComplexMatrix::Identity(6, 6), 2, 2), DimensionMismatch);
    EXPECT_THROW(partial_transpose(ComplexMatrix::Identity(4, 5), 2, 2), DimensionMismatch);
}

TEST(matops, partial_trace_examples) {
    std::mt19937_64 rng(7);
    const ComplexMatrix ra = oracle::random_state(rng, 4, 2);
    const ComplexMatrix rb = 3.0 * oracle::random_state(rng, 4, 2);  // trace 3
    EXPECT_LT(oracle::max_abs_diff(partial_trace(kron(ra, rb), 4, 4, Subsystem::A), 3.0 * ra),
              1e-12);
    EXPECT_LT(oracle::max_abs_diff(partial_trace(max_entangled(4).matrix(), 4, 4, Subsystem::A),
                                   ComplexMatrix::Identity(4, 4) / 4.0),
              1e-15);
    EXPECT_LT(oracle::max_abs_diff(
                  partial_trace(ComplexMatrix::Identity(16, 16) / 16.0, 4, 4, Subsystem::B),
                  ComplexMatrix::Identity(4, 4) / 4.0),
              1e-15);

    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho = oracle::random_state(rng, 15, 4);
        const ComplexMatrix keep_a = partial_trace(rho, 3, 5, Subsystem::A);
        const ComplexMatrix keep_b = partial_trace(rho, 3, 5, Subsystem::B);
        EXPECT_LT(oracle::max_abs_diff(keep_a, oracle::trace_out_b(rho, 3, 5)), 1e-14);
        EXPECT_LT(oracle::max_abs_diff(keep_b, oracle::trace_out_a(rho, 3, 5)), 1e-14);
        EXPECT_NEAR(keep_a.trace().real(), 1.0, 1e-12);
    }
    EXPECT_THROW(partial_trace(ComplexMatrix::Identity(6, 6), 2, 2, Subsystem::A),
                 DimensionMismatch);
}

TEST(matops, unitary_and_projector) {
    EXPECT_TRUE(is_unitary(oracle::pauli(2), 1e-12));
    EXPECT_FALSE(is_unitary(2.0 * oracle::pauli(2), 1e-12));
    EXPECT_FALSE(is_unitary(ComplexMatrix::Identity(2, 3), 1e-12));
    ComplexVector v(2);
    v << 1.0, Complex(0.0, 1.0);
    v /= std::sqrt(2.0);
    const ComplexMatrix p = projector(v);
    EXPECT_LT(oracle::max_abs_diff(p * p, p), 1e-15);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-15);
}
