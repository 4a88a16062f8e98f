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

#include <cstdint>
#include <utility>
#include <vector>

#include "ozkit/algebra.hpp"
#include "ozkit/cp_map.hpp"

namespace ozkit {

// Embedding data for a random *-homomorphism A → B. multiplicities[j][i] is
// how many copies of domain block i sit in codomain block j; whatever is
// left of block j stays as a zero corner.
struct GenSpec {
  FdAlgebra domain;
  FdAlgebra codomain;
  std::vector<std::vector<int>> multiplicities;
  std::uint64_t seed = 0;
  bool strict_h = true;

  // Throws InvalidArgument on a shape mismatch and EmbeddingTooLarge when
  // Σ_i multiplicities[j][i]·n_i exceeds a codomain block.
  void validate() const;
};

// π = U (⊕_i a_i ⊗ 1_{μ_ji} ⊕ 0) U† on each codomain block j, U Haar.
CpMap random_hom(const GenSpec& spec);

// φ = hπ with π = random_hom(spec) and h = U (⊕_i 1_{n_i} ⊗ H_ji) U†,
// H_ji positive with eigenvalues in [0.05, 1]. Without strict_h each
// eigenvalue is zeroed with probability 1/4, so supp(h) can be smaller
// than π(1).
CpMap random_order_zero(const GenSpec& spec);

// Random Kraus operators; rescaled so that ‖φ‖ is uniform in [0.5, 1].
CpMap random_cp_map(const FdAlgebra& domain, const FdAlgebra& codomain, int kraus_count,
                    std::uint64_t seed);

// (x₊, x₋) for a random self-adjoint x.
std::pair<Element, Element> random_orthogonal_pair(const FdAlgebra& algebra, std::uint64_t seed);
std::pair<Element, Element> orthogonal_parts(const Element& x);

// φ + ε·(random c.p. map with 2 Kraus operators), rescaled to be
// contractive. ε = 0 returns φ. Throws InvalidArgument for ε < 0.
CpMap perturb(const CpMap& phi, double epsilon, std::uint64_t seed);

// Draws a codomain and multiplicities for the given domain with total
// codomain size at most max_codomain_size: up to two codomain blocks,
// multiplicities 0..2, an optional zero corner.
GenSpec random_gen_spec(const FdAlgebra& domain, int max_codomain_size, std::uint64_t seed,
                        bool strict_h = true);

}  // namespace ozkit
