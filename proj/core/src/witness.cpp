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

#include <cmath>
#include <string>

#include "bewit/criteria.hpp"
#include "bewit/errors.hpp"
#include "bewit/tolerances.hpp"

namespace bewit {

namespace {

int sign_of(double t, double zero_tol) {
    if (std::abs(t) <= zero_tol) {
        return 0;
    }
    return t > 0.0 ? 1 : -1;
}

// F_z = sum_x rho_x (x) (sum_y w_xyz rho_y)
ComplexMatrix witness_operator(const WitnessCoefficients& w, int z,
                               std::span<const ComplexMatrix, kBasisSize> prep_a,
                               std::span<const ComplexMatrix, kBasisSize> prep_b) {
    ComplexMatrix f = ComplexMatrix::Zero(16, 16);
    for (int x = 1; x <= kBasisSize; ++x) {
        ComplexMatrix side = ComplexMatrix::Zero(4, 4);
        for (int y = 1; y <= kBasisSize; ++y) {
            const int n = w.numerator(x, y, z);
            if (n != 0) {
                side += static_cast<double>(n) * prep_b[static_cast<std::size_t>(y - 1)];
            }
        }
        f += kron(prep_a[static_cast<std::size_t>(x - 1)], side);
    }
    return f / 16.0;
}

}  // namespace

WitnessCoefficients::WitnessCoefficients(const std::array<std::int8_t, kWitnessSize>& numerators,
                                         const Permutation& permutation)
    : numerators_(numerators), permutation_(permutation) {
    for (std::int8_t n : numerators_) {
        if (n < -1 || n > 1) {
            throw DomainError("WitnessCoefficients: numerators must be -1, 0 or +1");
        }
    }
}

WitnessCoefficients witness_coefficients(std::span<const double, kBasisSize> diag_t,
                                         const Permutation& permutation, double zero_tol) {
    std::array<std::int8_t, kWitnessSize> n{};
    for (int z = 1; z <= kBasisSize; ++z) {
        const int sz = sign_of(diag_t[static_cast<std::size_t>(z - 1)], zero_tol);
        for (int x = 1; x <= kBasisSize; ++x) {
            for (int y = 1; y <= kBasisSize; ++y) {
                n[static_cast<std::size_t>(WitnessCoefficients::flat_index(x, y, z))] =
                    static_cast<std::int8_t>(sz * conj_sign(x, z) *
                                             conj_sign(permutation(y), permutation(z)));
            }
        }
    }
    return WitnessCoefficients(n, permutation);
}

WitnessCoefficients canonical_coefficients() {
    std::array<double, kBasisSize> ones;
    ones.fill(1.0);
    return witness_coefficients(ones, Permutation());
}

WitnessCoefficients witness_for_state(const DensityMatrix& rho, const Permutation& permutation) {
    const auto diag = correlation_diagonal(rho, permutation);
    return witness_coefficients(diag, permutation, 1e-12);
}

double correlator(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v,
                  const ComplexMatrix& c) {
    if (u.rows() != rho.dim_a() || v.rows() != rho.dim_b()) {
        throw DimensionMismatch("correlator: encoding unitaries do not match the state");
    }
    if (!is_unitary(u, tol::kUnitary) || !is_unitary(v, tol::kUnitary)) {
        throw NotUnitary("correlator: encoding operator is not unitary");
    }
    if (c.rows() != rho.dim() || c.cols() != rho.dim()) {
        throw DimensionMismatch("correlator: observable does not match the state");
    }
    if (!is_hermitian(c, tol::kHermitian)) {
        throw SpectrumOutOfRange("correlator: observable is not Hermitian");
    }
    const RealVector spectrum = hermitian_eigenvalues(c);
    if (spectrum.minCoeff() < -1.0 - tol::kEquality || spectrum.maxCoeff() > 1.0 + tol::kEquality) {
        throw SpectrumOutOfRange("correlator: observable spectrum leaves [-1, 1]");
    }
    const ComplexMatrix uv = kron(u, v);
    return (uv * rho.matrix() * uv.adjoint() * c).trace().real();
}

std::vector<double> pauli_strategy_correlators(const DensityMatrix& rho,
                                               const Permutation& permutation) {
    if (rho.dim_a() != kLocalDim || rho.dim_b() != kLocalDim) {
        throw DimensionMismatch("pauli_strategy_correlators: expected a 4x4 state");
    }
    const ProductBasis basis = product_basis(permutation);
    std::array<ComplexMatrix, kBasisSize> observables;
    for (int z = 1; z <= kBasisSize; ++z) {
        // Transposed so that Tr(rho C) is an entrywise dot product.
        observables[static_cast<std::size_t>(z - 1)] =
            (4.0 * kron(basis.A(z), basis.B(z))).transpose();
    }
    std::vector<double> out(kWitnessSize);
    for (int x = 1; x <= kBasisSize; ++x) {
        for (int y = 1; y <= kBasisSize; ++y) {
            const ComplexMatrix uv = kron(2.0 * basis.A(x), 2.0 * basis.B(y));
            const ComplexMatrix rho_xy = uv * rho.matrix() * uv.adjoint();
            for (int z = 1; z <= kBasisSize; ++z) {
                out[static_cast<std::size_t>(WitnessCoefficients::flat_index(x, y, z))] =
                    rho_xy.cwiseProduct(observables[static_cast<std::size_t>(z - 1)]).sum().real();
            }
        }
    }
    return out;
}

double entangled_value(const DensityMatrix& rho, const WitnessCoefficients& w) {
    const std::vector<double> e = pauli_strategy_correlators(rho, w.permutation());
    double sum = 0.0;
    double carry = 0.0;
    for (int i = 0; i < kWitnessSize; ++i) {
        const int n = w.numerators()[static_cast<std::size_t>(i)];
        if (n == 0) {
            continue;
        }
        const double term = n * e[static_cast<std::size_t>(i)] / 16.0 - carry;
        const double next = sum + term;
        carry = (next - sum) - term;
        sum = next;
    }
    return sum;
}

void validate_strategy(const PMStrategy& strategy) {
    auto check_prep = [](const ComplexMatrix& rho, const char* side, int index) {
        if (rho.rows() != kLocalDim || rho.cols() != kLocalDim) {
            throw InvalidStrategy(std::string("preparation ") + side + std::to_string(index) +
                                  " is not 4x4");
        }
        if (!validate_state(DensityMatrix(rho, kLocalDim, 1)).pass) {
            throw InvalidStrategy(std::string("preparation ") + side + std::to_string(index) +
                                  " is not a density matrix");
        }
    };
    for (int k = 0; k < kBasisSize; ++k) {
        check_prep(strategy.prep_a[static_cast<std::size_t>(k)], "A", k + 1);
        check_prep(strategy.prep_b[static_cast<std::size_t>(k)], "B", k + 1);
        const ComplexMatrix& c = strategy.observables[static_cast<std::size_t>(k)];
        if (c.rows() != 16 || c.cols() != 16 || !is_hermitian(c, tol::kHermitian)) {
            throw InvalidStrategy("observable " + std::to_string(k + 1) +
                                  " is not a Hermitian 16x16 matrix");
        }
        const RealVector spectrum = hermitian_eigenvalues(c);
        if (spectrum.minCoeff() < -1.0 - tol::kEquality ||
            spectrum.maxCoeff() > 1.0 + tol::kEquality) {
            throw InvalidStrategy("observable " + std::to_string(k + 1) +
                                  " has spectrum outside [-1, 1]");
        }
    }
}

double evaluate_witness(const WitnessCoefficients& w, const PMStrategy& strategy) {
    validate_strategy(strategy);
    double sum = 0.0;
    double carry = 0.0;
    for (int z = 1; z <= kBasisSize; ++z) {
        const ComplexMatrix f = witness_operator(w, z, strategy.prep_a, strategy.prep_b);
        const double term =
            (f * strategy.observables[static_cast<std::size_t>(z - 1)]).trace().real() - carry;
        const double next = sum + term;
        carry = (next - sum) - term;
        sum = next;
    }
    return sum;
}

PMStrategy product_pauli_strategy() {
    PMStrategy s;
    ComplexMatrix zero = ComplexMatrix::Zero(4, 4);
    zero(0, 0) = 1.0;
    for (int k = 1; k <= kBasisSize; ++k) {
        const ComplexMatrix u = 2.0 * product_operator(k);
        const ComplexMatrix prep = u * zero * u.adjoint();
        s.prep_a[static_cast<std::size_t>(k - 1)] = prep;
        s.prep_b[static_cast<std::size_t>(k - 1)] = prep;
        s.observables[static_cast<std::size_t>(k - 1)] =
            4.0 * kron(product_operator(k), product_operator(k));
    }
    return s;
}

std::array<ComplexMatrix, kBasisSize> optimal_observables(
    const WitnessCoefficients& w, std::span<const ComplexMatrix, kBasisSize> prep_a,
    std::span<const ComplexMatrix, kBasisSize> prep_b) {
    std::array<ComplexMatrix, kBasisSize> out;
    for (int z = 1; z <= kBasisSize; ++z) {
        const HermitianEigen eig = hermitian_eig(witness_operator(w, z, prep_a, prep_b));
        RealVector signs(eig.values.size());
        for (Eigen::Index j = 0; j < signs.size(); ++j) {
            signs(j) = eig.values(j) >= 0.0 ? 1.0 : -1.0;
        }
        out[static_cast<std::size_t>(z - 1)] =
            eig.vectors * signs.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    }
    return out;
}

PMStrategy classical_message_strategy(const WitnessCoefficients& w) {
    PMStrategy s;
    for (int k = 1; k <= kBasisSize; ++k) {
        const int level = PauliIndex::from_flat(k).k1;
        ComplexMatrix basis_state = ComplexMatrix::Zero(4, 4);
        basis_state(level, level) = 1.0;
        s.prep_a[static_cast<std::size_t>(k - 1)] = basis_state;
        s.prep_b[static_cast<std::size_t>(k - 1)] = basis_state;
    }
    s.observables = optimal_observables(w, s.prep_a, s.prep_b);
    return s;
}

}  // namespace bewit
