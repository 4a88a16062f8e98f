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
#include "ozkit/cp_map.hpp"

namespace ozkit {

// Cuntz class of a positive element of M_k(A): one rank per block of A.
// For finite-dimensional A this rank vector determines the class.
struct CuntzClass {
  FdAlgebra algebra;  // A, not M_k(A)
  int k = 1;
  std::vector<int> ranks;

  bool operator==(const CuntzClass& other) const = default;
};

// W(φ) on rank vectors: r ↦ T r, T of shape codomain blocks × domain blocks.
struct CuntzMorphism {
  std::vector<std::vector<int>> T;

  std::vector<int> operator()(const std::vector<int>& ranks) const;
};

// M_k(A) as an FdAlgebra: blocks k·n_i.
FdAlgebra amplified_algebra(const FdAlgebra& base, int k);

// a positive in M_k(A) (the element's algebra must be amplified_algebra(A, k)
// for some A). Ranks count eigenvalues above eps_rank·‖a‖.
// Throws NotPositive, InvalidArgument.
CuntzClass cuntz_class(const Element& a, int k = 1, const Tolerance& tol = {});

// ranks(c1) ≤ ranks(c2) pointwise. Throws AlgebraMismatch.
bool subequivalent(const CuntzClass& c1, const CuntzClass& c2);

// Pads with zeros to level k_to ≥ c.k: ⟨a⟩ = ⟨a ⊕ 0⟩. Ranks are unchanged.
CuntzClass normalize_level(const CuntzClass& c, int k_to);

// c1 + c2 (orthogonal sum); both at the same level, result at level k1 + k2.
CuntzClass add(const CuntzClass& c1, const CuntzClass& c2);

struct CuntzWitness {
  Element x;
  double residual;  // ‖a − x* b x‖
};

// Blockwise x = b_δ^{-1/2} u a^{1/2}, where b_δ is b compressed to its
// spectral subspace above δ and u is a partial isometry carrying the
// eigenvectors of a (support cutoff eps_rank) onto the top eigenvectors of b.
// Throws NotSubequivalent if some block rank of a exceeds that of b,
// DeltaTooLarge if b has too few eigenvalues above δ, NotPositive.
CuntzWitness construct_witness(const Element& a, const Element& b, double delta,
                               const Tolerance& tol = {});

// Column i is the rank vector of π(e^{(i)}_11) for the structure π of φ.
// Throws NotOrderZero.
CuntzMorphism induced_morphism(const CpMap& phi, const Tolerance& tol = {});

}  // namespace ozkit
