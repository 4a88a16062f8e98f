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

#include <optional>
#include <vector>

#include "ozkit/algebra.hpp"
#include "ozkit/cp_map.hpp"

namespace ozkit {

// τ(a) = Σ_i w_i Tr(a_i), w_i ≥ 0. On a finite-dimensional algebra every
// 2-quasitrace is of this form as well.
class TracialFunctional {
 public:
  // Throws InvalidArgument on a negative weight or a length mismatch.
  TracialFunctional(FdAlgebra algebra, std::vector<double> weights);

  static TracialFunctional trace(const FdAlgebra& algebra);

  const FdAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  FdAlgebra algebra_;
  std::vector<double> weights_;
};

// ℓ(a) = Σ_{i,p,q} c^{(i)}_{pq} a^{(i)}_{pq}, where c^{(i)}_{pq} = ℓ(e^{(i)}_{pq}).
struct LinearFunctional {
  FdAlgebra algebra;
  std::vector<Matrix> coefficients;
};

Complex apply_trace(const TracialFunctional& tau, const Element& a);
Complex apply_functional(const LinearFunctional& l, const Element& a);

// τ ∘ φ. Throws AlgebraMismatch.
LinearFunctional compose_with_map(const TracialFunctional& tau, const CpMap& phi);

// ℓ is tracial iff ℓ(e_pq) = 0 for p ≠ q and ℓ(e_pp) is constant on each
// block; the returned weights are ℓ(e^{(i)}_11). Nullopt when the criterion
// fails within eps_eq·max(1, max |c|), or when a weight is negative.
std::optional<TracialFunctional> is_tracial(const LinearFunctional& l, const Tolerance& tol = {});

}  // namespace ozkit
