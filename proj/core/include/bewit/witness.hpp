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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bewit/basis.hpp"
#include "bewit/matops.hpp"
#include "bewit/states.hpp"

namespace bewit {

inline constexpr int kWitnessSize = kBasisSize * kBasisSize * kBasisSize;

/// Coefficients w_xyz in {-1/16, 0, +1/16}, stored as their numerators.
class WitnessCoefficients {
   public:
    WitnessCoefficients() = default;
    WitnessCoefficients(const std::array<std::int8_t, kWitnessSize>& numerators,
                        const Permutation& permutation);

    /// One-based x, y, z.
    double operator()(int x, int y, int z) const { return numerator(x, y, z) / 16.0; }
    int numerator(int x, int y, int z) const {
        return numerators_[static_cast<std::size_t>(flat_index(x, y, z))];
    }
    const Permutation& permutation() const { return permutation_; }
    const std::array<std::int8_t, kWitnessSize>& numerators() const { return numerators_; }

    static int flat_index(int x, int y, int z) { return (x - 1) * 256 + (y - 1) * 16 + (z - 1); }

    friend bool operator==(const WitnessCoefficients&, const WitnessCoefficients&) = default;

   private:
    std::array<std::int8_t, kWitnessSize> numerators_{};
    Permutation permutation_;
};

/// w_xyz = sgn(t_zz) Tr(A_x A_z A_x A_z) Tr(B_y B_z B_y B_z). Entries with
/// |t_zz| <= zero_tol get sgn = 0.
WitnessCoefficients witness_coefficients(std::span<const double, kBasisSize> diag_t,
                                         const Permutation& permutation, double zero_tol = 0.0);

/// Identity permutation and all signs positive.
WitnessCoefficients canonical_coefficients();

/// Witness tailored to rho: signs of its correlation diagonal under `permutation`.
WitnessCoefficients witness_for_state(const DensityMatrix& rho, const Permutation& permutation);

/// E = Tr[(U (x) V) rho (U (x) V)^dagger C].
double correlator(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v,
                  const ComplexMatrix& c);

/// All 4096 correlators of the Pauli strategy U_x = 2A_x, V_y = 2B_y,
/// C_z = 4 A_z (x) B_z, indexed by WitnessCoefficients::flat_index.
std::vector<double> pauli_strategy_correlators(const DensityMatrix& rho,
                                               const Permutation& permutation);

/// sum_xyz w_xyz E_xyz for the Pauli strategy, simulated term by term.
double entangled_value(const DensityMatrix& rho, const WitnessCoefficients& w);

/// Unentangled strategy: preparations on each side and Charlie's observables.
struct PMStrategy {
    std::array<ComplexMatrix, kBasisSize> prep_a;
    std::array<ComplexMatrix, kBasisSize> prep_b;
    std::array<ComplexMatrix, kBasisSize> observables;
};

/// Throws InvalidStrategy unless preparations are 4x4 states and -I <= C_z <= I.
void validate_strategy(const PMStrategy& strategy);

/// sum_xyz w_xyz Tr(rho_x (x) rho_y C_z).
double evaluate_witness(const WitnessCoefficients& w, const PMStrategy& strategy);

/// rho_x = (2A_x)|0><0|(2A_x)^dagger on both sides, C_z = 4 A_z (x) A_z.
PMStrategy product_pauli_strategy();

/// C_z maximizing the witness for fixed preparations: the sign of F_z on each eigenspace,
/// with zero eigenvalues mapped to +1.
std::array<ComplexMatrix, kBasisSize> optimal_observables(
    const WitnessCoefficients& w, std::span<const ComplexMatrix, kBasisSize> prep_a,
    std::span<const ComplexMatrix, kBasisSize> prep_b);

/// Alice sends m_A = x1, Bob sends m_B = y1 as basis states; Charlie decodes optimally.
PMStrategy classical_message_strategy(const WitnessCoefficients& w);

}  // namespace bewit
