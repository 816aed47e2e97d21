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
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bewit/basis.hpp"
#include "bewit/matops.hpp"
#include "bewit/tolerances.hpp"

namespace bewit {

/// A bipartite operator tagged with its local dimensions. The constructor only
/// checks shapes; use validate_state() or the named constructors for positivity.
class DensityMatrix {
   public:
    DensityMatrix(ComplexMatrix matrix, int dim_a, int dim_b);

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }

   private:
    ComplexMatrix matrix_;
    int dim_a_;
    int dim_b_;
};

/// rho = sum_k lambda_k A_k (x) B_k with B_k = A_{P(k)}.
struct BlochDiagonalSpec {
    std::array<double, kBasisSize> lambdas{};
    Permutation permutation;
};

/// Constants of the Bloch-diagonal catalog.
namespace catalog_constants {
inline const double q = 19.0 / 340.0;
inline const double r1 = (std::sqrt(2.0) - 1.0) / 4.0;
inline const double r2 = (2.0 - std::sqrt(2.0)) / 4.0;
inline const double r3 = r2 - r1;
inline const double r4 = r2 / 2.0;
inline constexpr double s1 = 0.0557066;
inline constexpr double s2 = 0.0142664;
inline constexpr double s3 = 0.0971467;
}  // namespace catalog_constants

struct StateId {
    enum class Kind { ME, WernerAS, WernerLoc, R6, R8, BPD, Sentis, Rho3x3, Asym };
    Kind kind = Kind::ME;
    double param = 1.0;  // visibility for Asym, unused otherwise

    friend bool operator==(const StateId&, const StateId&) = default;
};

/// The seven Bloch-diagonal catalog rows in table order.
std::vector<StateId> bloch_catalog_ids();
/// "me", "werner-as", "werner-loc", "r6", "r8", "bpd", "sentis", "rho3x3", "asym:<v>".
StateId parse_state_id(std::string_view text);
std::string to_string(const StateId& id);

struct StateReport {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

/// Passes iff Hermiticity and trace defects are <= tol and the spectrum is >= -tol.
StateReport validate_state(const DensityMatrix& rho, double tol = tol::kPsdSlack);

/// Throws InvalidState if validate_state(rho, slack) fails.
void require_valid_state(const DensityMatrix& rho, double slack = tol::kPsdSlack);

DensityMatrix from_bloch_diagonal(const BlochDiagonalSpec& spec, double psd_slack = tol::kPsdSlack);

/// Table coefficients and B-side permutation; throws UnknownStateId for non-Bloch ids.
BlochDiagonalSpec catalog_spec(StateId::Kind kind);
/// B-side permutation the state's witness should be built with.
Permutation catalog_permutation(const StateId& id);
/// PSD slack appropriate for the catalog state.
double catalog_psd_slack(const StateId& id);
DensityMatrix catalog(const StateId& id);

/// p P_as / dim(as) + (1-p) P_sym / dim(sym).
DensityMatrix werner(double p, int d = kLocalDim);

/// |Phi+><Phi+| with |Phi+> = d^{-1/2} sum_k |kk>.
DensityMatrix max_entangled(int d);

/// Embeds a 4x4 state into levels {0..3} of each side of a D x D space.
DensityMatrix embed_local(const DensityMatrix& rho, int dim);

/// v rho + (1-v) I/D^2. A 4x4 input with D > 4 is embedded first.
DensityMatrix isotropic_mix(const DensityMatrix& rho, double v, int dim = kLocalDim);

/// P rho P + Tr[(1-P) rho] rhoA (x) rhoB, with P projecting each side onto its first
/// four levels. The result lives on 4 x 4.
DensityMatrix reprepare_channel(const DensityMatrix& rho_dv, const ComplexMatrix& rho_a,
                                const ComplexMatrix& rho_b);

/// Assembles the four-qubit Bell-product mixture and regroups (A B A' B') into (A A')(B B').
DensityMatrix bpd_from_bell_mixture();

/// Correlation matrix entries of the embedded 3x3 PPT state, symmetric, in the A_k basis.
RealMatrix rho_3x3_correlations();
DensityMatrix rho_3x3();

/// v rho_BPD + (1-v) (I/4) (x) |0><0|.
DensityMatrix rho_asym(double v);

}  // namespace bewit
