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
#include <functional>
#include <optional>
#include <string>

#include "ozkit/algebra.hpp"
#include "ozkit/cp_map.hpp"

namespace ozkit {

// Structure data of a c.p. order zero map φ = h·π:
//   h  = φ(1), positive, commuting with π(A)
//   π  = a *-homomorphism into the corner sBs, π(1) = s
//   s  = support projection of h
struct OrderZeroDecomposition {
  Element h;
  CpMap pi;
  Element s;
};

// Positive, orthogonal a, b in the domain with φ(a)φ(b) ≠ 0.
struct OrderZeroWitness {
  Element a;
  Element b;
  double violation;  // ‖φ(a)φ(b)‖
};

class NotOrderZeroError : public Error {
 public:
  NotOrderZeroError(const std::string& what, std::optional<OrderZeroWitness> witness)
      : Error(ErrorKind::NotOrderZero, what), witness_(std::move(witness)) {}

  const std::optional<OrderZeroWitness>& witness() const noexcept { return witness_; }

 private:
  std::optional<OrderZeroWitness> witness_;
};

struct DecompositionReport {
  double reconstruction = 0.0;    // max ‖h·π(e_pq) − φ(e_pq)‖
  double multiplicativity = 0.0;  // matrix-unit relations and *-preservation of π
  double commutator = 0.0;        // max ‖[h, π(e_pq)]‖
  double norm_gap = 0.0;          // |‖h‖ − ‖φ‖|
  double support = 0.0;           // ‖π(1) − s‖
  bool h_positive = true;

  bool reconstruction_ok = true;
  bool multiplicativity_ok = true;
  bool commutator_ok = true;
  bool norm_ok = true;
  bool support_ok = true;

  bool passed() const {
    return h_positive && reconstruction_ok && multiplicativity_ok && commutator_ok && norm_ok &&
           support_ok;
  }
  double max_residual() const;
};

// h = φ(1), s = supp(h), π(e) = h⁺φ(e), with no checks beyond complete
// positivity. Throws NotCompletelyPositive.
OrderZeroDecomposition structure_candidate(const CpMap& phi, const Tolerance& tol = {});

// Computes h = φ(1), s = supp(h), π(e) = h⁺φ(e) and verifies every structure
// identity. On failure throws NotOrderZeroError carrying a witness when the
// seeded search finds one. Throws NotCompletelyPositive for non-c.p. input.
OrderZeroDecomposition decompose(const CpMap& phi, const Tolerance& tol = {},
                                 std::uint64_t seed = 0);

// Residuals of a claimed decomposition against φ. π's multiplicativity is
// checked on the generating relations π(e_p1)π(e_1q) = π(e_pq),
// π(e_1p)π(e_q1) = δ_pq π(e_11), π(e_qp) = π(e_pq)* and
// π(e^{(i)}_11)π(e^{(j)}_11) = 0 for i ≠ j, which together are equivalent
// to the full table of products.
DecompositionReport verify_decomposition(const CpMap& phi, const OrderZeroDecomposition& d,
                                         const Tolerance& tol = {});

struct OrderZeroResult {
  bool order_zero = false;
  std::optional<OrderZeroWitness> witness;
  std::optional<OrderZeroDecomposition> decomposition;

  explicit operator bool() const { return order_zero; }
};

// True iff decompose succeeds. Throws NotCompletelyPositive.
OrderZeroResult is_order_zero(const CpMap& phi, const Tolerance& tol = {},
                              std::uint64_t seed = 0);

// Seeded search for an orthogonal positive pair whose images are not
// orthogonal: 64 random self-adjoint elements, each split into its positive
// and negative parts and into its rank-one spectral projections.
std::optional<OrderZeroWitness> find_witness(const CpMap& phi, const Tolerance& tol = {},
                                             std::uint64_t seed = 0);

// a ↦ f(h)π(a). f must vanish at 0 and be nonnegative on the spectrum of h
// (eigenvalues clamped to [0, ‖h‖]). Throws InvalidFunction, NotOrderZero.
CpMap functional_calculus(const CpMap& phi, const std::function<double(double)>& f,
                          const Tolerance& tol = {});

}  // namespace ozkit
