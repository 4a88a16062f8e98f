// Copyright 2026 The ozkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "ozkit/algebra.hpp"

namespace ozkit {

// A linear map between finite-dimensional C*-algebras, determined by the
// images of the matrix units of its domain. images()[i][p * n_i + q] is the
// image of e^{(i)}_{pq}. Nothing about positivity is assumed.
class CpMap {
 public:
  // Throws InvalidMap if the image table does not match the domain shape or
  // an image lives in the wrong algebra.
  CpMap(FdAlgebra domain, FdAlgebra codomain, std::vector<std::vector<Element>> images);

  const FdAlgebra& domain() const noexcept { return domain_; }
  const FdAlgebra& codomain() const noexcept { return codomain_; }
  const std::vector<std::vector<Element>>& images() const noexcept { return images_; }
  const Element& image(int block, int p, int q) const;

 private:
  FdAlgebra domain_;
  FdAlgebra codomain_;
  std::vector<std::vector<Element>> images_;
};

CpMap make_map(FdAlgebra domain, FdAlgebra codomain,
               std::vector<std::vector<Element>> images);

CpMap identity_map(const FdAlgebra& algebra);
CpMap zero_map(const FdAlgebra& domain, const FdAlgebra& codomain);
// e_pq ↦ e_qp in every block. Positive but not completely positive.
CpMap transpose_map(const FdAlgebra& algebra);

// Builds a map from an arbitrary rule evaluated on matrix units.
template <typename F>
CpMap map_from_rule(const FdAlgebra& domain, const FdAlgebra& codomain, F&& rule) {
  std::vector<std::vector<Element>> images;
  for (int i = 0; i < domain.num_blocks(); ++i) {
    const int n = domain.block_dim(i);
    std::vector<Element> row;
    row.reserve(static_cast<size_t>(n * n));
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) row.push_back(rule(Element::matrix_unit(domain, i, p, q)));
    }
    images.push_back(std::move(row));
  }
  return CpMap(domain, codomain, std::move(images));
}

CpMap scale(const CpMap& phi, double s);
CpMap operator+(const CpMap& phi, const CpMap& psi);

// Σ a^{(i)}_{pq} · image(i, p, q). Throws AlgebraMismatch.
Element apply(const CpMap& phi, const Element& a);

// max over matrix units of ‖φ(e) − ψ(e)‖.
double map_distance(const CpMap& phi, const CpMap& psi);

// One (n_i·n)×(n_i·n) matrix per domain block, n the codomain total size:
// C_i = Σ_{p,q} E_pq ⊗ embed(image(i, p, q)).
std::vector<Matrix> choi_blocks(const CpMap& phi);

// Every Choi block Hermitian within eps_eq and PSD within eps_psd.
bool is_completely_positive(const CpMap& phi, const Tolerance& tol = {});

// Stinespring data in Kraus form: for domain block i, φ(a) restricted to
// block i is Σ_j V_j a_i V_j†, each V_j an n×n_i matrix, read back blockwise
// into the codomain.
struct KrausDecomposition {
  FdAlgebra domain;
  FdAlgebra codomain;
  std::vector<std::vector<Matrix>> operators;
};

// Throws NotCompletelyPositive.
KrausDecomposition kraus(const CpMap& phi, const Tolerance& tol = {});
CpMap map_from_kraus(const KrausDecomposition& k);

// ‖φ(1)‖, which is ‖φ‖ for a c.p. map. Throws NotCompletelyPositive.
double map_norm(const CpMap& phi, const Tolerance& tol = {});
bool is_contractive(const CpMap& phi, const Tolerance& tol = {});
// Divides by map_norm when it exceeds 1; otherwise returns φ unchanged.
CpMap rescale_to_contractive(const CpMap& phi, const Tolerance& tol = {});

// Blocks {n_i·m_j} in lexicographic order (i major).
FdAlgebra tensor_algebra(const FdAlgebra& a, const FdAlgebra& b);
// a ⊗ b with the block order of tensor_algebra.
Element tensor_elements(const Element& a, const Element& b);

// φ ⊗ ψ. In finite dimensions the minimal and maximal tensor products
// coincide, so this is both.
CpMap tensor(const CpMap& phi, const CpMap& psi);

// φ^{(k)} = id_{M_k} ⊗ φ : M_k(A) → M_k(B). Throws InvalidArgument if k < 1.
CpMap amplify(const CpMap& phi, int k);

// ψ ∘ φ. Throws AlgebraMismatch unless codomain(φ) = domain(ψ).
CpMap compose(const CpMap& psi, const CpMap& phi);

}  // namespace ozkit
