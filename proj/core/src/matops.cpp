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

#include <string>

#include "bewit/errors.hpp"
#include "bewit/tolerances.hpp"

namespace bewit {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionMismatch(std::string(what) + ": expected a non-empty square matrix, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_bipartite(const ComplexMatrix& rho, int dim_a, int dim_b, const char* what) {
    require_square(rho, what);
    if (dim_a <= 0 || dim_b <= 0 || rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw DimensionMismatch(std::string(what) + ": matrix of size " + std::to_string(rho.rows()) +
                                " does not factor as " + std::to_string(dim_a) + "x" +
                                std::to_string(dim_b));
    }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("hermiticity_defect: matrix is not square");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const ComplexMatrix defect = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
    return defect.cwiseAbs().maxCoeff() <= tol;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
    require_square(m, "hermitian_eig");
    const double defect = hermiticity_defect(m);
    if (defect > tol::kHermitian) {
        throw NotHermitian("hermitian_eig: Hermiticity defect " + std::to_string(defect));
    }
    // Symmetrize so that the solver sees an exactly Hermitian input.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    require_square(m, "hermitian_eigenvalues");
    const double defect = hermiticity_defect(m);
    if (defect > tol::kHermitian) {
        throw NotHermitian("hermitian_eigenvalues: Hermiticity defect " + std::to_string(defect));
    }
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

RealVector singular_values(const ComplexMatrix& m) {
    if (m.size() == 0) {
        return RealVector();
    }
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

RealVector singular_values(const RealMatrix& m) {
    if (m.size() == 0) {
        return RealVector();
    }
    return Eigen::JacobiSVD<RealMatrix>(m).singularValues();
}

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

double trace_norm(const RealMatrix& m) { return singular_values(m).sum(); }

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim_a, int dim_b) {
    require_bipartite(rho, dim_a, dim_b, "partial_transpose");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_a; ++j) {
            out.block(i * dim_b, j * dim_b, dim_b, dim_b) =
                rho.block(i * dim_b, j * dim_b, dim_b, dim_b).transpose();
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, Subsystem keep) {
    require_bipartite(rho, dim_a, dim_b, "partial_trace");
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i) {
            for (int j = 0; j < dim_a; ++j) {
                out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_a; ++i) {
        out += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
    }
    return out;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace bewit
