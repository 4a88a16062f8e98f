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

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ozkit/errors.hpp"

namespace ozkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Numerical thresholds shared by every check in the library.
//
//  eps_psd   eigenvalue floor below which an element stops being positive
//  eps_eq    equality threshold for norms of differences
//  eps_rank  singular-value cutoff relative to the largest singular value
//
// Absolute thresholds are multiplied by max(1, norm of the inputs) at the
// point of use so that results do not depend on the overall scale.
struct Tolerance {
  double eps_psd = 1e-8;
  double eps_eq = 1e-8;
  double eps_rank = 1e-7;

  // Sets eps_psd and eps_eq together, keeping eps_rank at its default.
  static Tolerance uniform(double eps) {
    Tolerance t;
    t.eps_psd = eps;
    t.eps_eq = eps;
    return t;
  }

  void validate() const;
};

// A finite-dimensional C*-algebra M_{n_1} ⊕ ... ⊕ M_{n_k}.
class FdAlgebra {
 public:
  // Throws InvalidAlgebra on an empty list or a non-positive entry.
  explicit FdAlgebra(std::vector<int> block_dims);

  const std::vector<int>& block_dims() const noexcept { return dims_; }
  int num_blocks() const noexcept { return static_cast<int>(dims_.size()); }
  int block_dim(int i) const { return dims_.at(static_cast<size_t>(i)); }
  // Row offset of block i inside the block-diagonal embedding.
  int block_offset(int i) const { return offsets_.at(static_cast<size_t>(i)); }
  int total_size() const noexcept { return total_; }
  // Σ n_i², the complex dimension of the algebra as a vector space.
  int linear_dimension() const noexcept;

  bool operator==(const FdAlgebra& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int total_ = 0;
};

FdAlgebra make_algebra(std::vector<int> block_dims);

// Blockwise element of an FdAlgebra. Values are immutable once built.
class Element {
 public:
  // Throws InvalidArgument if the block count or any block shape differs
  // from the algebra.
  Element(FdAlgebra algebra, std::vector<Matrix> blocks);

  static Element zero(const FdAlgebra& algebra);
  static Element unit(const FdAlgebra& algebra);
  // e^{(block)}_{pq}
  static Element matrix_unit(const FdAlgebra& algebra, int block, int p, int q);
  // Keeps only the diagonal blocks of an n×n matrix.
  static Element from_embedded(const FdAlgebra& algebra, const Matrix& m);

  const FdAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(int i) const { return blocks_.at(static_cast<size_t>(i)); }
  int num_blocks() const noexcept { return algebra_.num_blocks(); }

  // Block-diagonal n×n matrix.
  Matrix embedded() const;

 private:
  FdAlgebra algebra_;
  std::vector<Matrix> blocks_;
};

void require_same_algebra(const FdAlgebra& a, const FdAlgebra& b,
                          const char* context);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(Complex s, const Element& a);
Element operator*(double s, const Element& a);
Element operator-(const Element& a);
Element adjoint(const Element& a);

// ab − ba
Element commutator(const Element& a, const Element& b);

// Largest singular value over all blocks.
double operator_norm(const Element& a);
// operator_norm(a − b)
double distance(const Element& a, const Element& b);

bool is_self_adjoint(const Element& a, const Tolerance& tol = {});
bool is_positive(const Element& a, const Tolerance& tol = {});
// p = p* = p² within eps_eq.
bool is_projection(const Element& a, const Tolerance& tol = {});

struct SpectralComponent {
  double eigenvalue;
  Element projection;
};

// Eigenvalues ascending; eigenvalues closer than eps_eq·max(1, ‖a‖) are
// merged (chained clustering) and their projections summed. The projections
// are mutually orthogonal and add up to the unit.
// Throws NotSelfAdjoint.
std::vector<SpectralComponent> spectral_decomposition(const Element& a,
                                                      const Tolerance& tol = {});

// All eigenvalues of a self-adjoint element, one vector per block, ascending.
std::vector<RealVector> block_eigenvalues(const Element& a);

// a ⊥ b: ab = ba = a*b = ab* = 0 within eps_eq·max(1, ‖a‖‖b‖).
bool are_orthogonal(const Element& a, const Element& b, const Tolerance& tol = {});

// Spectral projection onto eigenvalues > eps_rank·λ_max. Throws NotPositive.
Element support_projection(const Element& a, const Tolerance& tol = {});

// Moore-Penrose inverse of a positive element, dropping eigenvalues at or
// below eps_rank·λ_max. Throws NotPositive.
Element pseudo_inverse(const Element& a, const Tolerance& tol = {});

// f applied eigenvalue-wise to the Hermitian part of a, no clustering.
Element apply_function(const Element& a, const std::function<double(double)>& f);

// Square root of a positive element; tiny negative eigenvalues clamp to 0.
Element positive_sqrt(const Element& a);

// x = x₊ − x₋ with x₊, x₋ ≥ 0 and x₊x₋ = 0.
Element positive_part(const Element& x);
Element negative_part(const Element& x);

}  // namespace ozkit
