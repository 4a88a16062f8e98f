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
#include <vector>

#include "ozkit/algebra.hpp"
#include "ozkit/cp_map.hpp"

namespace ozkit {

// A polynomial f(t) = Σ_j c_j t^j, coefficients from the constant term up.
// Elements of C₀((0,1]) are modelled by polynomials with c_0 = 0.
struct Polynomial {
  std::vector<double> coefficients;

  static Polynomial monomial(int degree);
  double operator()(double t) const;
  bool vanishes_at_zero(double eps = 0.0) const;
  Polynomial operator*(const Polynomial& other) const;
};

struct ConeLevel {
  double t;  // in (0, 1]
  Element p;  // spectral projection of h for the value t
};

// A *-homomorphism ρ : C₀((0,1]) ⊗ A → B given by joint spectral data:
// ρ(f ⊗ a) = Σ_j f(t_j) p_j π(a), with the p_j commuting with π(A).
struct ConeHomRep {
  FdAlgebra domain;
  FdAlgebra codomain;
  std::vector<ConeLevel> levels;
  CpMap pi;
};

// Throws NotOrderZero, NotCompletelyPositive, NotContractive.
ConeHomRep to_cone_hom(const CpMap& phi, const Tolerance& tol = {});

// Checks the representation invariants; throws InvalidRep describing the
// first one that fails.
void validate_rep(const ConeHomRep& rep, const Tolerance& tol = {});

// a ↦ ρ(id ⊗ a). Throws InvalidRep.
CpMap from_cone_hom(const ConeHomRep& rep, const Tolerance& tol = {});

// ρ(f ⊗ a). Throws InvalidFunction unless f(0) = 0.
Element evaluate(const ConeHomRep& rep, const Polynomial& f, const Element& a);

struct HomReport {
  double max_defect = 0.0;
  bool passed = true;
};

// max ‖ρ(fg ⊗ ab) − ρ(f ⊗ a)ρ(g ⊗ b)‖ over 100 seeded samples with f, g
// monomials of degree 1..4 and a, b random elements.
HomReport verify_hom(const ConeHomRep& rep, const Tolerance& tol = {}, std::uint64_t seed = 0);

}  // namespace ozkit
