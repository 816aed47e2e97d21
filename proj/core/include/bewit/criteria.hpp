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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bewit/basis.hpp"
#include "bewit/matops.hpp"
#include "bewit/states.hpp"
#include "bewit/tolerances.hpp"

namespace bewit {

/// t_kl = Tr(rho G_k (x) H_l). Real part of the trace; for Hermitian inputs the
/// imaginary part vanishes.
using CorrelationTensor = RealMatrix;

CorrelationTensor correlation_tensor(const DensityMatrix& rho, std::span<const ComplexMatrix> basis_a,
                                     std::span<const ComplexMatrix> basis_b);
/// 4 x 4 states in the A_k (x) B_l product basis.
CorrelationTensor correlation_tensor(const DensityMatrix& rho, const ProductBasis& basis);

/// Sum of singular values of the correlation tensor in orthonormal Hermitian bases.
double ccnr(const DensityMatrix& rho);

/// diag(T) under the permuted B basis.
std::array<double, kBasisSize> correlation_diagonal(const DensityMatrix& rho,
                                                    const Permutation& permutation = Permutation());

/// S = sum_k |t_kk|.
double trace_criterion_S(const DensityMatrix& rho, const Permutation& permutation = Permutation());

double negativity(const DensityMatrix& rho);
double min_partial_transpose_eigenvalue(const DensityMatrix& rho);
bool is_ppt(const DensityMatrix& rho, double tol = tol::kPsdSlack);

/// Quantum Fisher information from the spectral formula.
double qfi(const DensityMatrix& rho, const ComplexMatrix& hamiltonian);

/// H (x) I + I (x) H for a single-side generator H.
ComplexMatrix local_hamiltonian(const ComplexMatrix& h);
/// diag(+1, -1, +1, -1) = I (x) Z.
ComplexMatrix hamiltonian_i_z();
/// diag(+1, +1, -1, -1) = Z (x) I.
ComplexMatrix hamiltonian_z_i();

/// H_A (x) I + I (x) H_B.
ComplexMatrix local_hamiltonian(const ComplexMatrix& h_a, const ComplexMatrix& h_b);

/// Local generators searched by max_qfi: H (x) I +- I (x) H for H in {I (x) Z, Z (x) I}.
/// The minus sign matters for U (x) U invariant states such as the Werner family,
/// whose QFI vanishes under the symmetric generator.
struct LocalGenerator {
    std::string name;  // "IZ+IZ", "ZI+ZI", "IZ-IZ", "ZI-ZI"
    ComplexMatrix h;
};
const std::vector<LocalGenerator>& local_generators();

struct MaxQfi {
    double value = 0.0;
    std::size_t generator = 0;  // index into local_generators(); first wins on ties
};
MaxQfi max_qfi(const DensityMatrix& rho);

/// QFI above which a state with the local generators above is metrologically useful.
inline constexpr double kSeparableQfi = 8.0;

struct ThresholdResult {
    double v_star = 0.0;
    double bracket_width = 0.0;
    int iterations = 0;
};

using StateFamily = std::function<DensityMatrix(double)>;
using StatePredicate = std::function<bool(const DensityMatrix&)>;

/// Bisects the flip point of predicate(family(v)) on [lo, hi]. Requires the predicate
/// false at lo and true at hi; throws BracketError otherwise.
ThresholdResult v_threshold(const StateFamily& family, const StatePredicate& predicate, double lo,
                            double hi, double tol = tol::kBisection,
                            int max_iter = tol::kBisectionMaxIter);

/// 3 / (4 CCNR - 1), the isotropic-noise visibility at which a Bloch-diagonal state
/// reaches CCNR = 1.
double v_pm_closed_form(double ccnr_value);

/// Trace criterion of the re-prepared rho_BPD family with product noise |0><0|.
/// `dim` empty means D -> infinity.
double highdim_S(double v, std::optional<int> dim);

/// v CCNR(rho) + (1-v)/D; `dim` empty means D -> infinity.
double highdim_ccnr(double ccnr_rho, double v, std::optional<int> dim);

/// Cited values that are not recomputed here.
struct ReferenceConstant {
    double value = 0.0;
    std::string_view source;
};

std::optional<ReferenceConstant> reference_v_loc(StateId::Kind kind);
/// Separability thresholds that need more than the PPT test.
std::optional<ReferenceConstant> reference_v_sep(StateId::Kind kind);

}  // namespace bewit
