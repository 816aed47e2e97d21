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


#include "bewit/witness.hpp"

#include <random>

#include "gtest/gtest.h"

#include "bewit/criteria.hpp"
#include "bewit/errors.hpp"
#include "oracles.hpp"

using namespace bewit;
using K = StateId::Kind;

namespace {

int sgn(double t) { return (t > 0) - (t < 0); }

// w_xyz from the conjugation relations, evaluated with matrix traces.
double witness_oracle(const std::array<double, 16>& diag, const std::array<int, 16>& p, int x, int y, int z) {
    const oracle::Mat ax = oracle::A(x), az = oracle::A(z);
    const oracle::Mat by = oracle::A(p[y - 1]), bz = oracle::A(p[z - 1]);
    return sgn(diag[z - 1]) * (oracle::trace(ax * az * ax * az) * oracle::trace(by * bz * by * bz)).real();
}

oracle::Mat witness_operator(const WitnessCoefficients& w, const PMStrategy& s, int z) {
    oracle::Mat f = oracle::Mat::Zero(16, 16);
    for (int x = 1; x <= 16; ++x)
        for (int y = 1; y <= 16; ++y) f += w(x, y, z) * oracle::kron(s.prep_a[x - 1], s.prep_b[y - 1]);
    return f;
}

PMStrategy random_strategy(std::mt19937_64& rng) {
    PMStrategy s;
    for (int k = 0; k < 16; ++k) {
        s.prep_a[k] = oracle::random_state(rng, 4, 1 + k % 4);
        s.prep_b[k] = oracle::random_state(rng, 4, 1);
        // Random contraction: U diag(c) U^dagger with c in [-1, 1].
        const oracle::Mat u = oracle::random_unitary(rng, 16);
        std::uniform_real_distribution<double> c(-1.0, 1.0);
        Eigen::VectorXd d(16);
        for (int i = 0; i < 16; ++i) d(i) = c(rng);
        s.observables[k] = u * d.cast<oracle::C>().asDiagonal() * u.adjoint();
    }
    return s;
}

}  // namespace

TEST(witness, coefficient_examples) {
    std::array<double, 16> diag{};
    diag.fill(0.1);
    diag[0] = 0.25;
    const WitnessCoefficients w = witness_coefficients(diag, Permutation());
    EXPECT_EQ(w(1, 1, 1), 1.0 / 16.0);

    const WitnessCoefficients r6 = witness_for_state(catalog({K::R6}), catalog_permutation({K::R6}));
    for (int x = 1; x <= 16; ++x)
        for (int y = 1; y <= 16; ++y) {
            EXPECT_EQ(r6(x, y, 2), 0.0);
            EXPECT_EQ(r6(x, y, 3), 0.0);
        }

    std::array<double, 16> ones{};
    ones.fill(1.0);
    double total = 0.0;
    const WitnessCoefficients all = witness_coefficients(ones, Permutation::from_swaps({{2, 9}}));
    for (int x = 1; x <= 16; ++x)
        for (int y = 1; y <= 16; ++y)
            for (int z = 1; z <= 16; ++z) total += std::abs(all(x, y, z));
    EXPECT_EQ(total, 256.0);
}

TEST(witness, coefficients_match_trace_oracle) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 3; ++trial) {
        const auto p = oracle::random_perm(rng);
        std::array<double, 16> diag{};
        std::uniform_int_distribution<int> sign(-1, 1);
        for (double& d : diag) d = 0.1 * sign(rng);
        const WitnessCoefficients w = witness_coefficients(diag, Permutation(p));
        EXPECT_EQ(w.permutation(), Permutation(p));
        for (int x = 1; x <= 16; ++x)
            for (int y = 1; y <= 16; ++y)
                for (int z = 1; z <= 16; ++z) {
                    ASSERT_NEAR(w(x, y, z), witness_oracle(diag, p, x, y, z), 1e-15);
                    const int n = w.numerator(x, y, z);
                    ASSERT_TRUE(n == -1 || n == 0 || n == 1);
                    ASSERT_EQ(n == 0, diag[z - 1] == 0.0);
                    ASSERT_EQ(n, sgn(diag[z - 1]) * oracle::pauli_c((x - 1) / 4, (z - 1) / 4) *
                                     oracle::pauli_c((x - 1) % 4, (z - 1) % 4) *
                                     conj_sign(p[y - 1], p[z - 1]));
                }
    }
}

TEST(witness, zero_tolerance) {
    std::array<double, 16> diag{};
    diag.fill(0.2);
    diag[4] = 1e-14;
    EXPECT_NE(witness_coefficients(diag, Permutation()).numerator(1, 1, 5), 0);
    EXPECT_EQ(witness_coefficients(diag, Permutation(), 1e-12).numerator(1, 1, 5), 0);
}

TEST(witness, canonical_examples) {
    std::array<double, 16> ones{};
    ones.fill(1.0);
    const WitnessCoefficients c = canonical_coefficients();
    EXPECT_EQ(c, witness_coefficients(ones, Permutation()));
    EXPECT_EQ(c(2, 2, 4), 1.0 / 16.0);
    EXPECT_EQ(c(2, 1, 4), -1.0 / 16.0);
    for (int x = 1; x <= 16; ++x)
        for (int y = 1; y <= 16; ++y)
            for (int z = 1; z <= 16; ++z) ASSERT_EQ(c(x, y, z), c(y, x, z));
    EXPECT_TRUE(c.permutation().is_identity());
}

TEST(witness, flat_index) {
    EXPECT_EQ(WitnessCoefficients::flat_index(1, 1, 1), 0);
    EXPECT_EQ(WitnessCoefficients::flat_index(16, 16, 16), 4095);
    EXPECT_EQ(WitnessCoefficients::flat_index(2, 3, 4), 256 + 32 + 3);
}

TEST(witness, correlator_examples) {
    std::mt19937_64 rng(52);
    const DensityMatrix rho(oracle::random_state(rng, 16, 5), 4, 4);
    const ComplexMatrix u = oracle::random_unitary(rng, 4);
    const ComplexMatrix v = oracle::random_unitary(rng, 4);
    EXPECT_NEAR(correlator(rho, u, v, ComplexMatrix::Identity(16, 16)), 1.0, 1e-12);

    const ProductBasis b = product_basis();
    const DensityMatrix bpd = catalog({K::BPD});
    EXPECT_NEAR(correlator(bpd, 2.0 * b.A(1), 2.0 * b.B(1), 4.0 * kron(b.A(2), b.B(2))), 1.0 / 3.0, 1e-12);

    const DensityMatrix mixed(ComplexMatrix::Identity(16, 16) / 16.0, 4, 4);
    EXPECT_NEAR(correlator(mixed, u, v, 4.0 * kron(b.A(7), b.B(3))), 0.0, 1e-15);

    EXPECT_THROW(correlator(rho, 2.0 * u, v, ComplexMatrix::Identity(16, 16)), NotUnitary);
    EXPECT_THROW(correlator(rho, u, v, 2.0 * ComplexMatrix::Identity(16, 16)), SpectrumOutOfRange);
    ComplexMatrix skew = ComplexMatrix::Zero(16, 16);
    skew(0, 1) = 0.5;
    EXPECT_THROW(correlator(rho, u, v, skew), SpectrumOutOfRange);
}

TEST(witness, pauli_strategy_correlators_match_direct_simulation) {
    std::mt19937_64 rng(53);
    const DensityMatrix rho(oracle::random_state(rng, 16, 3), 4, 4);
    const auto p = oracle::random_perm(rng);
    const std::vector<double> e = pauli_strategy_correlators(rho, Permutation(p));
    ASSERT_EQ(e.size(), 4096u);
    std::uniform_int_distribution<int> idx(1, 16);
    for (int trial = 0; trial < 200; ++trial) {
        const int x = idx(rng), y = idx(rng), z = idx(rng);
        const oracle::Mat u = oracle::kron(2.0 * oracle::A(x), 2.0 * oracle::A(p[y - 1]));
        const oracle::Mat c = 4.0 * oracle::kron(oracle::A(z), oracle::A(p[z - 1]));
        const double direct = oracle::trace_prod(u * rho.matrix() * u.adjoint(), c).real();
        ASSERT_NEAR(e[WitnessCoefficients::flat_index(x, y, z)], direct, 1e-12);
    }
    // With B_1 = A_1 the z = 1 observable is the identity.
    const std::vector<double> plain = pauli_strategy_correlators(rho, Permutation());
    for (int x = 1; x <= 16; ++x)
        for (int y = 1; y <= 16; ++y) EXPECT_NEAR(plain[WitnessCoefficients::flat_index(x, y, 1)], 1.0, 1e-12);
}

TEST(witness, entangled_value_examples) {
    const DensityMatrix bpd = catalog({K::BPD});
    EXPECT_NEAR(entangled_value(bpd, witness_for_state(bpd, Permutation())), 96.0, 1e-9);
    const DensityMatrix mixed(ComplexMatrix::Identity(16, 16) / 16.0, 4, 4);
    EXPECT_NEAR(entangled_value(mixed, canonical_coefficients()), 16.0, 1e-9);
    const DensityMatrix me = max_entangled(4);
    EXPECT_NEAR(entangled_value(me, witness_for_state(me, Permutation())), 256.0, 1e-9);
    EXPECT_THROW(entangled_value(max_entangled(3), canonical_coefficients()), DimensionMismatch);
}

TEST(witness, value_matches_closed_form_on_random_states) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho(oracle::random_state(rng, 16, 1 + trial % 16), 4, 4);
        const auto p = oracle::random_perm(rng);
        const WitnessCoefficients w = witness_for_state(rho, Permutation(p));
        EXPECT_NEAR(entangled_value(rho, w), oracle::q_closed_form(rho.matrix(), p), 1e-8);
    }
    for (const StateId& id : bloch_catalog_ids()) {
        const DensityMatrix rho = catalog(id);
        const Permutation p = catalog_permutation(id);
        const double q = entangled_value(rho, witness_for_state(rho, p));
        EXPECT_NEAR(q, oracle::q_closed_form(rho.matrix(), p.images()), 1e-8);
        EXPECT_NEAR(q, 64.0 * ccnr(rho), 1e-8);
        EXPECT_GT(q, 64.0) << to_string(id);
    }
}

TEST(witness, evaluate_witness_examples) {
    const PMStrategy product = product_pauli_strategy();
    EXPECT_NO_THROW(validate_strategy(product));
    EXPECT_EQ(evaluate_witness(canonical_coefficients(), product), 64.0);

    PMStrategy zero = product;
    for (auto& c : zero.observables) c = ComplexMatrix::Zero(16, 16);
    EXPECT_EQ(evaluate_witness(canonical_coefficients(), zero), 0.0);

    // Brute-force linear functional on a random valid strategy.
    std::mt19937_64 rng(55);
    const PMStrategy s = random_strategy(rng);
    const WitnessCoefficients w = witness_for_state(catalog({K::R8}), catalog_permutation({K::R8}));
    double direct = 0.0;
    for (int z = 1; z <= 16; ++z) direct += oracle::trace_prod(witness_operator(w, s, z), s.observables[z - 1]).real();
    EXPECT_NEAR(evaluate_witness(w, s), direct, 1e-12);

    PMStrategy bad = product;
    bad.observables[3] *= 2.0;
    EXPECT_THROW(evaluate_witness(canonical_coefficients(), bad), InvalidStrategy);
    bad = product;
    bad.prep_a[0] *= 2.0;
    EXPECT_THROW(validate_strategy(bad), InvalidStrategy);
    bad = product;
    bad.prep_b[2] = ComplexMatrix::Identity(2, 2) / 2.0;
    EXPECT_THROW(validate_strategy(bad), InvalidStrategy);
}

TEST(witness, product_strategy_is_pauli_eigenstates) {
    const PMStrategy s = product_pauli_strategy();
    oracle::Mat zero = oracle::Mat::Zero(4, 4);
    zero(0, 0) = 1.0;
    for (int k = 1; k <= 16; ++k) {
        const oracle::Mat u = 2.0 * oracle::A(k);
        EXPECT_LT(oracle::max_abs_diff(s.prep_a[k - 1], u * zero * u.adjoint()), 1e-15);
        EXPECT_LT(oracle::max_abs_diff(s.prep_b[k - 1], s.prep_a[k - 1]), 1e-15);
        EXPECT_LT(oracle::max_abs_diff(s.observables[k - 1], 4.0 * oracle::kron(oracle::A(k), oracle::A(k))), 1e-15);
    }
}

TEST(witness, optimal_observables_reach_trace_norm) {
    std::mt19937_64 rng(56);
    const WitnessCoefficients w = canonical_coefficients();
    for (int trial = 0; trial < 3; ++trial) {
        PMStrategy s = random_strategy(rng);
        const double random_value = evaluate_witness(w, s);
        s.observables = optimal_observables(w, s.prep_a, s.prep_b);
        double bound = 0.0;
        for (int z = 1; z <= 16; ++z) {
            bound += oracle::trace_norm(witness_operator(w, s, z));
            const auto spec = oracle::real_spectrum(s.observables[z - 1]);
            for (double e : spec) EXPECT_NEAR(std::abs(e), 1.0, 1e-9);
        }
        const double best = evaluate_witness(w, s);
        EXPECT_NEAR(best, bound, 1e-9);
        EXPECT_GE(best, random_value - 1e-12);
        // Random contractions never do better.
        for (int k = 0; k < 5; ++k) {
            PMStrategy other = random_strategy(rng);
            other.prep_a = s.prep_a;
            other.prep_b = s.prep_b;
            EXPECT_LE(evaluate_witness(w, other), best + 1e-12);
        }
    }
}

TEST(witness, classical_message_strategy_reaches_64) {
    const PMStrategy s = classical_message_strategy(canonical_coefficients());
    EXPECT_NEAR(evaluate_witness(canonical_coefficients(), s), 64.0, 1e-12);
    for (int k = 1; k <= 16; ++k) {
        const ComplexMatrix& rho = s.prep_a[k - 1];
        const int level = (k - 1) % 4;
        EXPECT_EQ(rho(level, level), Complex(1.0));
        EXPECT_NEAR(rho.cwiseAbs().sum(), 1.0, 1e-15);
        // Charlie decodes with diagonal observables.
        const ComplexMatrix& c = s.observables[k - 1];
        EXPECT_NEAR((c - ComplexMatrix(c.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    }
}
