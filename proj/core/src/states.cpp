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

#include "bewit/states.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << what << ": parameter " << v << " outside [0, 1]";
        throw DomainError(msg.str());
    }
}

ComplexMatrix swap_operator(int d) {
    ComplexMatrix v = ComplexMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            v(j * d + i, i * d + j) = 1.0;
        }
    }
    return v;
}

ComplexVector basis_ket(int dim, int level) {
    ComplexVector v = ComplexVector::Zero(dim);
    v(level) = 1.0;
    return v;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, int dim_a, int dim_b)
    : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a <= 0 || dim_b <= 0 || matrix_.rows() != matrix_.cols() ||
        matrix_.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw DimensionMismatch("DensityMatrix: " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + " matrix is not a " +
                                std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                                " bipartite operator");
    }
}

std::vector<StateId> bloch_catalog_ids() {
    using K = StateId::Kind;
    return {{K::ME}, {K::WernerAS}, {K::WernerLoc}, {K::R6}, {K::R8}, {K::BPD}, {K::Sentis}};
}

StateId parse_state_id(std::string_view text) {
    using K = StateId::Kind;
    std::string name(text);
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == "me") return {K::ME};
    if (name == "werner-as") return {K::WernerAS};
    if (name == "werner-loc") return {K::WernerLoc};
    if (name == "r6") return {K::R6};
    if (name == "r8") return {K::R8};
    if (name == "bpd") return {K::BPD};
    if (name == "sentis") return {K::Sentis};
    if (name == "rho3x3") return {K::Rho3x3};
    if (name.rfind("asym:", 0) == 0) {
        const std::string arg = name.substr(5);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
        if (ec != std::errc() || ptr != arg.data() + arg.size()) {
            throw UnknownStateId("bad visibility in state id '" + std::string(text) + "'");
        }
        require_unit_interval(v, "parse_state_id");
        return {K::Asym, v};
    }
    if (name == "asym") return {K::Asym, 1.0};
    throw UnknownStateId("unknown state id '" + std::string(text) + "'");
}

std::string to_string(const StateId& id) {
    using K = StateId::Kind;
    switch (id.kind) {
        case K::ME: return "me";
        case K::WernerAS: return "werner-as";
        case K::WernerLoc: return "werner-loc";
        case K::R6: return "r6";
        case K::R8: return "r8";
        case K::BPD: return "bpd";
        case K::Sentis: return "sentis";
        case K::Rho3x3: return "rho3x3";
        case K::Asym: {
            std::ostringstream out;
            out << "asym:" << id.param;
            return out.str();
        }
    }
    throw UnknownStateId("unknown state kind");
}

StateReport validate_state(const DensityMatrix& rho, double tol) {
    StateReport report;
    const ComplexMatrix& m = rho.matrix();
    report.hermiticity_defect = hermiticity_defect(m);
    report.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    report.min_eigenvalue = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h, Eigen::EigenvaluesOnly)
                                .eigenvalues()
                                .minCoeff();
    report.pass = report.hermiticity_defect <= tol && report.trace_defect <= tol &&
                  report.min_eigenvalue >= -tol;
    return report;
}

void require_valid_state(const DensityMatrix& rho, double slack) {
    const StateReport r = validate_state(rho, slack);
    if (!r.pass) {
        std::ostringstream msg;
        msg << "invalid state: hermiticity defect " << r.hermiticity_defect << ", trace defect "
            << r.trace_defect << ", min eigenvalue " << r.min_eigenvalue << " (slack " << slack
            << ")";
        throw InvalidState(msg.str());
    }
}

DensityMatrix from_bloch_diagonal(const BlochDiagonalSpec& spec, double psd_slack) {
    const ProductBasis basis = product_basis(spec.permutation);
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    for (int k = 1; k <= kBasisSize; ++k) {
        const double lambda = spec.lambdas[static_cast<std::size_t>(k - 1)];
        if (lambda != 0.0) {
            rho += lambda * kron(basis.A(k), basis.B(k));
        }
    }
    DensityMatrix out(std::move(rho), kLocalDim, kLocalDim);
    require_valid_state(out, psd_slack);
    return out;
}

BlochDiagonalSpec catalog_spec(StateId::Kind kind) {
    using namespace catalog_constants;
    using K = StateId::Kind;
    constexpr double a = 0.25;
    constexpr double w = 1.0 / 12.0;
    switch (kind) {
        case K::ME:
            return {{a, a, -a, a, a, a, -a, a, -a, -a, a, -a, a, a, -a, a}, Permutation()};
        case K::WernerAS:
            return {{a, -w, -w, -w, -w, -w, -w, -w, -w, -w, -w, -w, -w, -w, -w, -w},
                    Permutation()};
        case K::WernerLoc:
            return {{a, -q, -q, -q, -q, -q, -q, -q, -q, -q, -q, -q, -q, -q, -q, -q},
                    Permutation()};
        case K::R6:
            return {{a, 0, 0, -r1, r2, r2, 0, -r2, 0, 0, r2, 0, r3, 0, 0, r1},
                    Permutation::from_swaps({{6, 11}})};
        case K::R8:
            return {{a, r4, -r4, r3, r1, r4, -r4, -r1, 0, -r4, -r4, 0, 0, -r4, -r4, 0},
                    Permutation::from_swaps({{10, 11}, {14, 15}})};
        case K::BPD:
            return {{a, w, -w, -w, -w, w, w, w, w, w, w, -w, w, w, -w, w}, Permutation()};
        case K::Sentis:
            return {{a, -s1, -s1, -s1, -s1, -s1, s2, s3, -s1, s3, s2, -s1, s2, -s1, s3, -s1},
                    Permutation()};
        default:
            throw UnknownStateId("catalog_spec: state is not Bloch-diagonal");
    }
}

Permutation catalog_permutation(const StateId& id) {
    using K = StateId::Kind;
    if (id.kind == K::R6 || id.kind == K::R8) {
        return catalog_spec(id.kind).permutation;
    }
    return Permutation();
}

double catalog_psd_slack(const StateId& id) {
    return id.kind == StateId::Kind::Sentis ? tol::kTruncatedPsdSlack : tol::kPsdSlack;
}

DensityMatrix catalog(const StateId& id) {
    using K = StateId::Kind;
    switch (id.kind) {
        case K::Rho3x3:
            return rho_3x3();
        case K::Asym:
            return rho_asym(id.param);
        default:
            return from_bloch_diagonal(catalog_spec(id.kind), catalog_psd_slack(id));
    }
}

DensityMatrix werner(double p, int d) {
    require_unit_interval(p, "werner");
    if (d < 2) {
        throw InvalidDimension("werner: dimension must be >= 2");
    }
    const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
    const ComplexMatrix v = swap_operator(d);
    const double dim_as = d * (d - 1) / 2.0;
    const double dim_sym = d * (d + 1) / 2.0;
    ComplexMatrix rho = p * (id - v) / (2.0 * dim_as) + (1.0 - p) * (id + v) / (2.0 * dim_sym);
    DensityMatrix out(std::move(rho), d, d);
    require_valid_state(out);
    return out;
}

DensityMatrix max_entangled(int d) {
    if (d < 2) {
        throw InvalidDimension("max_entangled: dimension must be >= 2");
    }
    ComplexVector phi = ComplexVector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
        phi(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return DensityMatrix(projector(phi), d, d);
}

DensityMatrix embed_local(const DensityMatrix& rho, int dim) {
    const int da = rho.dim_a();
    const int db = rho.dim_b();
    if (dim < da || dim < db) {
        throw DimensionMismatch("embed_local: target dimension " + std::to_string(dim) +
                                " smaller than input");
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim * dim, dim * dim);
    for (int i = 0; i < da; ++i) {
        for (int a = 0; a < db; ++a) {
            for (int j = 0; j < da; ++j) {
                for (int b = 0; b < db; ++b) {
                    out(i * dim + a, j * dim + b) = rho.matrix()(i * db + a, j * db + b);
                }
            }
        }
    }
    return DensityMatrix(std::move(out), dim, dim);
}

DensityMatrix isotropic_mix(const DensityMatrix& rho, double v, int dim) {
    require_unit_interval(v, "isotropic_mix");
    if (dim < kLocalDim) {
        throw DimensionMismatch("isotropic_mix: D must be >= 4, got " + std::to_string(dim));
    }
    const DensityMatrix base =
        (rho.dim_a() == dim && rho.dim_b() == dim) ? rho : embed_local(rho, dim);
    const int n = dim * dim;
    ComplexMatrix out =
        v * base.matrix() + (1.0 - v) * ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    return DensityMatrix(std::move(out), dim, dim);
}

DensityMatrix reprepare_channel(const DensityMatrix& rho_dv, const ComplexMatrix& rho_a,
                                const ComplexMatrix& rho_b) {
    const int dim = rho_dv.dim_a();
    if (rho_dv.dim_b() != dim || dim < kLocalDim) {
        throw DimensionMismatch("reprepare_channel: input must be D x D with D >= 4");
    }
    if (rho_a.rows() != kLocalDim || rho_a.cols() != kLocalDim || rho_b.rows() != kLocalDim ||
        rho_b.cols() != kLocalDim) {
        throw DimensionMismatch("reprepare_channel: re-prepared marginals must be 4x4");
    }
    require_valid_state(DensityMatrix(rho_a, kLocalDim, 1));
    require_valid_state(DensityMatrix(rho_b, kLocalDim, 1));

    ComplexMatrix kept(16, 16);
    for (int i = 0; i < kLocalDim; ++i) {
        for (int a = 0; a < kLocalDim; ++a) {
            for (int j = 0; j < kLocalDim; ++j) {
                for (int b = 0; b < kLocalDim; ++b) {
                    kept(i * kLocalDim + a, j * kLocalDim + b) =
                        rho_dv.matrix()(i * dim + a, j * dim + b);
                }
            }
        }
    }
    const Complex leaked = rho_dv.matrix().trace() - kept.trace();
    DensityMatrix out(kept + leaked * kron(rho_a, rho_b), kLocalDim, kLocalDim);
    require_valid_state(out);
    return out;
}

DensityMatrix bpd_from_bell_mixture() {
    const double h = 1.0 / std::sqrt(2.0);
    // Two-qubit kets, index = 2*first + second.
    ComplexVector psi1(4);
    psi1 << 0.0, h, h, 0.0;  // (|01> + |10>)/sqrt2

    const ComplexMatrix id2 = pauli(0);
    auto local = [&](int k) { return kron(pauli(k), id2); };

    // Natural order of the four qubits is (A, B, A', B').
    ComplexMatrix natural = ComplexMatrix::Zero(16, 16);
    for (int k : {0, 1, 3}) {
        const ComplexVector pair = local(k) * psi1;
        natural += (1.0 / 6.0) * kron(projector(pair), projector(pair));
    }
    const ComplexVector psi4 = local(2) * psi1;  // |Phi->, up to a global phase
    for (int k : {0, 1, 3}) {
        const ComplexVector pair = local(k) * psi1;
        natural += (1.0 / 6.0) * kron(projector(psi4), projector(pair));
    }

    // Regroup qubits (A, B, A', B') -> (A, A', B, B').
    auto regroup = [](int idx) {
        const int a = (idx >> 3) & 1;
        const int b = (idx >> 2) & 1;
        const int ap = (idx >> 1) & 1;
        const int bp = idx & 1;
        return (a << 3) | (ap << 2) | (b << 1) | bp;
    };
    ComplexMatrix grouped(16, 16);
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            grouped(regroup(r), regroup(c)) = natural(r, c);
        }
    }
    DensityMatrix out(std::move(grouped), kLocalDim, kLocalDim);
    require_valid_state(out);
    return out;
}

RealMatrix rho_3x3_correlations() {
    using namespace catalog_constants;
    RealMatrix t = RealMatrix::Zero(16, 16);
    const std::array<double, 16> diag = {0.25, r4, -r4, -r3, 0, r4, r4, 0,
                                         0,    r4, r4,  0,   r1, r4, -r4, r1};
    for (int k = 0; k < 16; ++k) {
        t(k, k) = diag[static_cast<std::size_t>(k)];
    }
    auto set = [&](int k, int l, double value) {
        t(k - 1, l - 1) = value;
        t(l - 1, k - 1) = value;
    };
    set(1, 13, 1.0 / 8.0);
    set(1, 16, -1.0 / 8.0);
    set(7, 10, -r4);
    set(6, 11, r4);
    set(2, 14, r4);
    set(3, 15, -r4);
    set(4, 13, r3 / 2.0);
    set(4, 16, -r3 / 2.0);
    return t;
}

DensityMatrix rho_3x3() {
    const RealMatrix t = rho_3x3_correlations();
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    for (int k = 1; k <= kBasisSize; ++k) {
        for (int l = 1; l <= kBasisSize; ++l) {
            if (t(k - 1, l - 1) != 0.0) {
                rho += t(k - 1, l - 1) * kron(product_operator(k), product_operator(l));
            }
        }
    }
    DensityMatrix out(std::move(rho), kLocalDim, kLocalDim);
    require_valid_state(out);
    return out;
}

DensityMatrix rho_asym(double v) {
    require_unit_interval(v, "rho_asym");
    const DensityMatrix bpd = catalog({StateId::Kind::BPD});
    const ComplexMatrix noise =
        kron(ComplexMatrix::Identity(4, 4) / 4.0, projector(basis_ket(4, 0)));
    DensityMatrix out(v * bpd.matrix() + (1.0 - v) * noise, kLocalDim, kLocalDim);
    require_valid_state(out);
    return out;
}

}  // namespace bewit
