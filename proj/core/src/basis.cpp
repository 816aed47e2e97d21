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

#include "bewit/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_flat(int k, const char* what) {
    if (k < 1 || k > kBasisSize) {
        throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(k) +
                              " outside 1..16");
    }
}

// c(i, j) = +1 if sigma_i and sigma_j commute, else -1.
int commute_sign(int i, int j) { return (i == j || i == 0 || j == 0) ? 1 : -1; }

}  // namespace

PauliIndex PauliIndex::from_flat(int flat) {
    require_flat(flat, "PauliIndex::from_flat");
    return {(flat - 1) / 4, (flat - 1) % 4};
}

Permutation::Permutation() {
    for (int k = 0; k < kBasisSize; ++k) {
        images_[static_cast<std::size_t>(k)] = k + 1;
    }
}

Permutation::Permutation(const std::array<int, kBasisSize>& images) : images_(images) {
    std::array<bool, kBasisSize> seen{};
    for (int image : images_) {
        if (image < 1 || image > kBasisSize) {
            throw InvalidPermutation("permutation image " + std::to_string(image) +
                                     " outside 1..16");
        }
        if (seen[static_cast<std::size_t>(image - 1)]) {
            throw InvalidPermutation("permutation repeats image " + std::to_string(image));
        }
        seen[static_cast<std::size_t>(image - 1)] = true;
    }
}

namespace {
std::array<int, kBasisSize> to_array(const std::vector<int>& images) {
    if (images.size() != kBasisSize) {
        throw InvalidPermutation("permutation needs 16 images, got " +
                                 std::to_string(images.size()));
    }
    std::array<int, kBasisSize> out{};
    std::copy(images.begin(), images.end(), out.begin());
    return out;
}
}  // namespace

Permutation::Permutation(const std::vector<int>& images) : Permutation(to_array(images)) {}

Permutation Permutation::from_swaps(std::initializer_list<std::pair<int, int>> swaps) {
    Permutation p;
    for (const auto& [i, j] : swaps) {
        require_flat(i, "Permutation::from_swaps");
        require_flat(j, "Permutation::from_swaps");
        std::swap(p.images_[static_cast<std::size_t>(i - 1)],
                  p.images_[static_cast<std::size_t>(j - 1)]);
    }
    return p;
}

int Permutation::operator()(int k) const {
    require_flat(k, "Permutation");
    return images_[static_cast<std::size_t>(k - 1)];
}

bool Permutation::is_identity() const { return *this == Permutation(); }

ComplexMatrix pauli(int i) {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    switch (i) {
        case 0:
            s(0, 0) = 1.0;
            s(1, 1) = 1.0;
            break;
        case 1:
            s(0, 1) = 1.0;
            s(1, 0) = 1.0;
            break;
        case 2:
            s(0, 1) = -kI;
            s(1, 0) = kI;
            break;
        case 3:
            s(0, 0) = 1.0;
            s(1, 1) = -1.0;
            break;
        default:
            throw IndexOutOfRange("pauli: index " + std::to_string(i) + " outside 0..3");
    }
    return s;
}

ComplexMatrix product_operator(int k) {
    const PauliIndex idx = PauliIndex::from_flat(k);
    return 0.5 * kron(pauli(idx.k0), pauli(idx.k1));
}

ProductBasis product_basis(const Permutation& permutation) {
    ProductBasis basis{{}, {}, permutation};
    for (int k = 1; k <= kBasisSize; ++k) {
        basis.a[static_cast<std::size_t>(k - 1)] = product_operator(k);
    }
    for (int k = 1; k <= kBasisSize; ++k) {
        basis.b[static_cast<std::size_t>(k - 1)] = basis.A(permutation(k));
    }
    return basis;
}

int conj_sign(PauliIndex x, PauliIndex z) {
    return commute_sign(x.k0, z.k0) * commute_sign(x.k1, z.k1);
}

int conj_sign(int x, int z) { return conj_sign(PauliIndex::from_flat(x), PauliIndex::from_flat(z)); }

SignTable::SignTable(const Permutation& permutation) : permutation_(permutation) {
    for (int x = 1; x <= kBasisSize; ++x) {
        for (int y = 1; y <= kBasisSize; ++y) {
            for (int z = 1; z <= kBasisSize; ++z) {
                const int s = conj_sign(x, z) * conj_sign(permutation(y), permutation(z));
                signs_[static_cast<std::size_t>((x - 1) * 256 + (y - 1) * 16 + (z - 1))] =
                    static_cast<std::int8_t>(s);
            }
        }
    }
}

int SignTable::operator()(int x, int y, int z) const {
    require_flat(x, "SignTable");
    require_flat(y, "SignTable");
    require_flat(z, "SignTable");
    return signs_[static_cast<std::size_t>((x - 1) * 256 + (y - 1) * 16 + (z - 1))];
}

SignTable sign_table(const ProductBasis& basis) { return SignTable(basis.permutation); }

std::vector<ComplexMatrix> hermitian_basis(int dim) {
    if (dim < 2) {
        throw InvalidDimension("hermitian_basis: dimension must be >= 2, got " +
                               std::to_string(dim));
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(dim * dim));
    out.push_back(ComplexMatrix::Identity(dim, dim) / std::sqrt(static_cast<double>(dim)));
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
            g(j, k) = inv_sqrt2;
            g(k, j) = inv_sqrt2;
            out.push_back(std::move(g));
        }
    }
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
            g(j, k) = -kI * inv_sqrt2;
            g(k, j) = kI * inv_sqrt2;
            out.push_back(std::move(g));
        }
    }
    for (int l = 1; l < dim; ++l) {
        ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int m = 0; m < l; ++m) {
            g(m, m) = norm;
        }
        g(l, l) = -static_cast<double>(l) * norm;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace bewit
