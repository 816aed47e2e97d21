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

#include "bewit/criteria.hpp"

#include <cmath>
#include <sstream>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

// Row k holds vec(G_k^T) so that t = G_A R G_B^T with R the realigned state.
ComplexMatrix stacked_transposes(std::span<const ComplexMatrix> basis, int dim) {
    ComplexMatrix out(static_cast<Eigen::Index>(basis.size()), dim * dim);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const ComplexMatrix& g = basis[k];
        if (g.rows() != dim || g.cols() != dim) {
            throw DimensionMismatch("correlation_tensor: basis operator has the wrong dimension");
        }
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                out(static_cast<Eigen::Index>(k), i * dim + j) = g(j, i);
            }
        }
    }
    return out;
}

void require_two_ququarts(const DensityMatrix& rho, const char* what) {
    if (rho.dim_a() != kLocalDim || rho.dim_b() != kLocalDim) {
        throw DimensionMismatch(std::string(what) + ": expected a 4x4 state");
    }
}

}  // namespace

CorrelationTensor correlation_tensor(const DensityMatrix& rho, std::span<const ComplexMatrix> basis_a,
                                     std::span<const ComplexMatrix> basis_b) {
    const int da = rho.dim_a();
    const int db = rho.dim_b();
    const ComplexMatrix ga = stacked_transposes(basis_a, da);
    const ComplexMatrix gb = stacked_transposes(basis_b, db);

    // R[(i, j), (a, b)] = rho[(i, a), (j, b)]
    ComplexMatrix realigned(da * da, db * db);
    const ComplexMatrix& m = rho.matrix();
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            for (int a = 0; a < db; ++a) {
                for (int b = 0; b < db; ++b) {
                    realigned(i * da + j, a * db + b) = m(i * db + a, j * db + b);
                }
            }
        }
    }
    return (ga * realigned * gb.transpose()).real();
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho, const ProductBasis& basis) {
    require_two_ququarts(rho, "correlation_tensor");
    return correlation_tensor(rho, std::span<const ComplexMatrix>(basis.a),
                              std::span<const ComplexMatrix>(basis.b));
}

double ccnr(const DensityMatrix& rho) {
    const auto basis_a = hermitian_basis(rho.dim_a());
    const auto basis_b = rho.dim_b() == rho.dim_a() ? basis_a : hermitian_basis(rho.dim_b());
    return trace_norm(correlation_tensor(rho, basis_a, basis_b));
}

std::array<double, kBasisSize> correlation_diagonal(const DensityMatrix& rho,
                                                    const Permutation& permutation) {
    require_two_ququarts(rho, "correlation_diagonal");
    const ProductBasis basis = product_basis(permutation);
    std::array<double, kBasisSize> diag{};
    for (int k = 1; k <= kBasisSize; ++k) {
        diag[static_cast<std::size_t>(k - 1)] =
            (rho.matrix() * kron(basis.A(k), basis.B(k))).trace().real();
    }
    return diag;
}

double trace_criterion_S(const DensityMatrix& rho, const Permutation& permutation) {
    double s = 0.0;
    for (double t : correlation_diagonal(rho, permutation)) {
        s += std::abs(t);
    }
    return s;
}

double negativity(const DensityMatrix& rho) {
    const RealVector eig =
        hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b()));
    return std::max(0.0, (eig.cwiseAbs().sum() - 1.0) / 2.0);
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho) {
    return hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b()))
        .minCoeff();
}

bool is_ppt(const DensityMatrix& rho, double tol) {
    return min_partial_transpose_eigenvalue(rho) >= -tol;
}

double qfi(const DensityMatrix& rho, const ComplexMatrix& hamiltonian) {
    if (hamiltonian.rows() != rho.dim() || hamiltonian.cols() != rho.dim()) {
        throw DimensionMismatch("qfi: Hamiltonian dimension does not match the state");
    }
    if (!is_hermitian(hamiltonian, tol::kHermitian)) {
        throw NotHermitian("qfi: Hamiltonian is not Hermitian");
    }
    const HermitianEigen eig = hermitian_eig(rho.matrix());
    const ComplexMatrix h_eig = eig.vectors.adjoint() * hamiltonian * eig.vectors;
    const Eigen::Index n = eig.values.size();
    double f = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double sum = eig.values(i) + eig.values(j);
            if (sum <= tol::kQfiCutoff) {
                continue;
            }
            const double diff = eig.values(i) - eig.values(j);
            f += diff * diff / sum * std::norm(h_eig(i, j));
        }
    }
    return 2.0 * f;
}

ComplexMatrix local_hamiltonian(const ComplexMatrix& h) {
    const ComplexMatrix id = ComplexMatrix::Identity(h.rows(), h.cols());
    return kron(h, id) + kron(id, h);
}

ComplexMatrix local_hamiltonian(const ComplexMatrix& h_a, const ComplexMatrix& h_b) {
    return kron(h_a, ComplexMatrix::Identity(h_b.rows(), h_b.cols())) +
           kron(ComplexMatrix::Identity(h_a.rows(), h_a.cols()), h_b);
}

const std::vector<LocalGenerator>& local_generators() {
    static const std::vector<LocalGenerator> generators = [] {
        const ComplexMatrix iz = hamiltonian_i_z();
        const ComplexMatrix zi = hamiltonian_z_i();
        return std::vector<LocalGenerator>{
            {"IZ+IZ", local_hamiltonian(iz, iz)},
            {"ZI+ZI", local_hamiltonian(zi, zi)},
            {"IZ-IZ", local_hamiltonian(iz, ComplexMatrix(-iz))},
            {"ZI-ZI", local_hamiltonian(zi, ComplexMatrix(-zi))},
        };
    }();
    return generators;
}

MaxQfi max_qfi(const DensityMatrix& rho) {
    MaxQfi best;
    const auto& generators = local_generators();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const double f = qfi(rho, generators[i].h);
        if (i == 0 || f > best.value) {
            best.value = f;
            best.generator = i;
        }
    }
    return best;
}

ComplexMatrix hamiltonian_i_z() { return kron(pauli(0), pauli(3)); }

ComplexMatrix hamiltonian_z_i() { return kron(pauli(3), pauli(0)); }

ThresholdResult v_threshold(const StateFamily& family, const StatePredicate& predicate, double lo,
                            double hi, double tol, int max_iter) {
    if (!(lo < hi)) {
        throw BracketError("v_threshold: empty bracket");
    }
    if (predicate(family(lo)) || !predicate(family(hi))) {
        std::ostringstream msg;
        msg << "v_threshold: predicate does not flip on [" << lo << ", " << hi << "]";
        throw BracketError(msg.str());
    }
    ThresholdResult result;
    while (hi - lo > tol && result.iterations < max_iter) {
        const double mid = 0.5 * (lo + hi);
        if (predicate(family(mid))) {
            hi = mid;
        } else {
            lo = mid;
        }
        ++result.iterations;
    }
    result.v_star = 0.5 * (lo + hi);
    result.bracket_width = hi - lo;
    return result;
}

double v_pm_closed_form(double ccnr_value) {
    if (!(ccnr_value > 1.0)) {
        throw DomainError("v_pm_closed_form: CCNR <= 1 has no detection threshold");
    }
    return std::min(1.0, 3.0 / (4.0 * ccnr_value - 1.0));
}

double highdim_S(double v, std::optional<int> dim) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("highdim_S: v outside [0, 1]");
    }
    double leak = 0.0;  // (1 - v) / D^2
    if (dim) {
        if (*dim < kLocalDim) {
            throw DomainError("highdim_S: D must be >= 4");
        }
        leak = (1.0 - v) / (static_cast<double>(*dim) * *dim);
    }
    return 2.0 * v / 3.0 + 0.75 - 8.0 * leak + std::abs(v / 3.0 - 0.25 + 4.0 * leak);
}

double highdim_ccnr(double ccnr_rho, double v, std::optional<int> dim) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("highdim_ccnr: v outside [0, 1]");
    }
    if (!dim) {
        return v * ccnr_rho;
    }
    if (*dim < kLocalDim) {
        throw DomainError("highdim_ccnr: D must be >= 4");
    }
    return v * ccnr_rho + (1.0 - v) / *dim;
}

std::optional<ReferenceConstant> reference_v_loc(StateId::Kind kind) {
    using K = StateId::Kind;
    switch (kind) {
        case K::ME:
            return ReferenceConstant{1.0 / 6.0 + 1.0 / 9.0 + 1.0 / 12.0,
                                     "projective LHV model for isotropic states (Almeida et al. 2007)"};
        case K::WernerAS:
            return ReferenceConstant{0.75, "Werner LHV model (Werner 1989)"};
        case K::WernerLoc:
            return ReferenceConstant{1.0, "Werner LHV model (Werner 1989)"};
        default:
            return std::nullopt;
    }
}

std::optional<ReferenceConstant> reference_v_sep(StateId::Kind kind) {
    using K = StateId::Kind;
    switch (kind) {
        case K::R6:
        case K::R8:
            return ReferenceConstant{0.7446, "two-copy PPT symmetric extension (Doherty et al. 2002)"};
        case K::Sentis:
            return ReferenceConstant{0.7814, "Breuer-Hall positive maps (Breuer 2006, Hall 2006)"};
        default:
            return std::nullopt;
    }
}

}  // namespace bewit
