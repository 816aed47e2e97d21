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
#include <initializer_list>
#include <utility>
#include <vector>

#include "bewit/matops.hpp"

namespace bewit {

inline constexpr int kLocalDim = 4;
inline constexpr int kBasisSize = 16;

/// A pair (k0, k1) in {0,1,2,3}^2, flattened one-based as 4*k0 + k1 + 1.
struct PauliIndex {
    int k0 = 0;
    int k1 = 0;

    static PauliIndex from_flat(int flat);
    int flat() const { return 4 * k0 + k1 + 1; }

    friend bool operator==(const PauliIndex&, const PauliIndex&) = default;
};

/// A bijection on {1..16}, stored one-based.
class Permutation {
   public:
    /// Identity.
    Permutation();
    /// Throws InvalidPermutation unless `images` is a bijection on {1..16}.
    explicit Permutation(const std::array<int, kBasisSize>& images);
    Permutation(const std::vector<int>& images);

    static Permutation identity() { return Permutation(); }
    /// Identity with the listed one-based transpositions applied.
    static Permutation from_swaps(std::initializer_list<std::pair<int, int>> swaps);

    int operator()(int k) const;
    const std::array<int, kBasisSize>& images() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

   private:
    std::array<int, kBasisSize> images_;
};

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
ComplexMatrix pauli(int i);

/// A_k = (1/2) sigma_{k0} (x) sigma_{k1}, k one-based.
ComplexMatrix product_operator(int k);

/// The A basis and its permuted partner B_k = A_{P(k)}.
struct ProductBasis {
    std::array<ComplexMatrix, kBasisSize> a;
    std::array<ComplexMatrix, kBasisSize> b;
    Permutation permutation;

    const ComplexMatrix& A(int k) const { return a.at(static_cast<std::size_t>(k - 1)); }
    const ComplexMatrix& B(int k) const { return b.at(static_cast<std::size_t>(k - 1)); }
};

ProductBasis product_basis(const Permutation& permutation = Permutation());

/// eta with Tr(A_x A_z A_x A_z) = eta / 4.
int conj_sign(PauliIndex x, PauliIndex z);
int conj_sign(int x, int z);

/// s(x, y, z) = 16 Tr(A_x A_z A_x A_z) Tr(B_y B_z B_y B_z), all entries +-1.
class SignTable {
   public:
    explicit SignTable(const Permutation& permutation);
    int operator()(int x, int y, int z) const;
    const Permutation& permutation() const { return permutation_; }

   private:
    Permutation permutation_;
    std::array<std::int8_t, kBasisSize * kBasisSize * kBasisSize> signs_{};
};

SignTable sign_table(const ProductBasis& basis);

/// D^2 orthonormal Hermitian operators: I/sqrt(D), then symmetric, antisymmetric
/// and diagonal generalized Gell-Mann matrices, each group in lexicographic order.
std::vector<ComplexMatrix> hermitian_basis(int dim);

}  // namespace bewit
