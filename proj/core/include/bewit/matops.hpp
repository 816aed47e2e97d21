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

#include <Eigen/Dense>
#include <complex>

namespace bewit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

enum class Subsystem { A, B };

/// Kronecker product; the result has dims (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

struct HermitianEigen {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // orthonormal columns, vectors.col(j) <-> values(j)
};

/// Throws NotHermitian if the input is not Hermitian within tol::kHermitian.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, ascending. Same precondition as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

RealVector singular_values(const ComplexMatrix& m);
RealVector singular_values(const RealMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);
double trace_norm(const RealMatrix& m);

/// Transposes the B factor of a (dimA*dimB)-square operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim_a, int dim_b);

/// Traces out the subsystem that is not `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, Subsystem keep);

/// Projector |v><v|.
ComplexMatrix projector(const ComplexVector& v);

}  // namespace bewit
