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

#include "ozkit/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linalg.hpp"

namespace ozkit {

void Tolerance::validate() const {
  if (!(eps_psd >= 0.0) || !(eps_eq >= 0.0) || !(eps_rank >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be nonnegative");
  }
}

FdAlgebra::FdAlgebra(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) {
    throw Error(ErrorKind::InvalidAlgebra, "an algebra needs at least one block");
  }
  offsets_.reserve(dims_.size());
  for (int n : dims_) {
    if (n < 1) {
      throw Error(ErrorKind::InvalidAlgebra,
                  "block dimension must be positive, got " + std::to_string(n));
    }
    offsets_.push_back(total_);
    total_ += n;
  }
}

int FdAlgebra::linear_dimension() const noexcept {
  int d = 0;
  for (int n : dims_) d += n * n;
  return d;
}

FdAlgebra make_algebra(std::vector<int> block_dims) {
  return FdAlgebra(std::move(block_dims));
}

Element::Element(FdAlgebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != algebra_.num_blocks()) {
    throw Error(ErrorKind::InvalidArgument,
                "element has " + std::to_string(blocks_.size()) +
                    " blocks, algebra has " + std::to_string(algebra_.num_blocks()));
  }
  for (int i = 0; i < algebra_.num_blocks(); ++i) {
    const auto& b = blocks_[static_cast<size_t>(i)];
    const int n = algebra_.block_dim(i);
    if (b.rows() != n || b.cols() != n) {
      throw Error(ErrorKind::InvalidArgument,
                  "block " + std::to_string(i) + " must be " + std::to_string(n) +
                      "x" + std::to_string(n));
    }
  }
}

Element Element::zero(const FdAlgebra& algebra) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(algebra.num_blocks()));
  for (int n : algebra.block_dims()) blocks.push_back(Matrix::Zero(n, n));
  return Element(algebra, std::move(blocks));
}

Element Element::unit(const FdAlgebra& algebra) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(algebra.num_blocks()));
  for (int n : algebra.block_dims()) blocks.push_back(Matrix::Identity(n, n));
  return Element(algebra, std::move(blocks));
}

Element Element::matrix_unit(const FdAlgebra& algebra, int block, int p, int q) {
  if (block < 0 || block >= algebra.num_blocks()) {
    throw Error(ErrorKind::InvalidArgument, "matrix unit block out of range");
  }
  const int n = algebra.block_dim(block);
  if (p < 0 || q < 0 || p >= n || q >= n) {
    throw Error(ErrorKind::InvalidArgument, "matrix unit index out of range");
  }
  Element e = zero(algebra);
  e.blocks_[static_cast<size_t>(block)](p, q) = 1.0;
  return e;
}

Element Element::from_embedded(const FdAlgebra& algebra, const Matrix& m) {
  if (m.rows() != algebra.total_size() || m.cols() != algebra.total_size()) {
    throw Error(ErrorKind::InvalidArgument, "embedded matrix has wrong size");
  }
  std::vector<Matrix> blocks;
  for (int i = 0; i < algebra.num_blocks(); ++i) {
    const int off = algebra.block_offset(i);
    const int n = algebra.block_dim(i);
    blocks.push_back(m.block(off, off, n, n));
  }
  return Element(algebra, std::move(blocks));
}

Matrix Element::embedded() const {
  const int n = algebra_.total_size();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < algebra_.num_blocks(); ++i) {
    const int off = algebra_.block_offset(i);
    const int d = algebra_.block_dim(i);
    m.block(off, off, d, d) = blocks_[static_cast<size_t>(i)];
  }
  return m;
}

void require_same_algebra(const FdAlgebra& a, const FdAlgebra& b, const char* context) {
  if (!(a == b)) {
    throw Error(ErrorKind::AlgebraMismatch, std::string(context) + ": algebras differ");
  }
}

namespace {

template <typename F>
Element blockwise(const Element& a, const Element& b, const char* ctx, F&& f) {
  require_same_algebra(a.algebra(), b.algebra(), ctx);
  std::vector<Matrix> out;
  out.reserve(a.blocks().size());
  for (size_t i = 0; i < a.blocks().size(); ++i) out.push_back(f(a.blocks()[i], b.blocks()[i]));
  return Element(a.algebra(), std::move(out));
}

template <typename F>
Element blockwise(const Element& a, F&& f) {
  std::vector<Matrix> out;
  out.reserve(a.blocks().size());
  for (const auto& m : a.blocks()) out.push_back(f(m));
  return Element(a.algebra(), std::move(out));
}

double rel(double x) { return std::max(1.0, x); }

}  // namespace

Element operator+(const Element& a, const Element& b) {
  return blockwise(a, b, "add", [](const Matrix& x, const Matrix& y) -> Matrix { return x + y; });
}

Element operator-(const Element& a, const Element& b) {
  return blockwise(a, b, "sub", [](const Matrix& x, const Matrix& y) -> Matrix { return x - y; });
}

Element operator*(const Element& a, const Element& b) {
  return blockwise(a, b, "mul", [](const Matrix& x, const Matrix& y) -> Matrix { return x * y; });
}

Element operator*(Complex s, const Element& a) {
  return blockwise(a, [s](const Matrix& x) -> Matrix { return s * x; });
}

Element operator*(double s, const Element& a) { return Complex(s, 0.0) * a; }

Element operator-(const Element& a) {
  return blockwise(a, [](const Matrix& x) -> Matrix { return -x; });
}

Element adjoint(const Element& a) {
  return blockwise(a, [](const Matrix& x) -> Matrix { return x.adjoint(); });
}

Element commutator(const Element& a, const Element& b) {
  return blockwise(a, b, "commutator",
                   [](const Matrix& x, const Matrix& y) -> Matrix { return x * y - y * x; });
}

double operator_norm(const Element& a) {
  double best = 0.0;
  for (const auto& m : a.blocks()) best = std::max(best, detail::spectral_norm(m));
  return best;
}

double distance(const Element& a, const Element& b) {
  require_same_algebra(a.algebra(), b.algebra(), "distance");
  double best = 0.0;
  for (size_t i = 0; i < a.blocks().size(); ++i) {
    best = std::max(best, detail::spectral_norm(a.blocks()[i] - b.blocks()[i]));
  }
  return best;
}

bool is_self_adjoint(const Element& a, const Tolerance& tol) {
  const double scale = rel(operator_norm(a));
  for (const auto& m : a.blocks()) {
    if (detail::spectral_norm(m - m.adjoint()) > tol.eps_eq * scale) return false;
  }
  return true;
}

bool is_positive(const Element& a, const Tolerance& tol) {
  if (!is_self_adjoint(a, tol)) return false;
  const double floor = -tol.eps_psd * rel(operator_norm(a));
  for (const auto& m : a.blocks()) {
    if (m.rows() == 0) continue;
    if (detail::hermitian_eigenvalues(m).minCoeff() < floor) return false;
  }
  return true;
}

bool is_projection(const Element& a, const Tolerance& tol) {
  return distance(a, adjoint(a)) <= tol.eps_eq && distance(a * a, a) <= tol.eps_eq;
}

std::vector<RealVector> block_eigenvalues(const Element& a) {
  std::vector<RealVector> out;
  out.reserve(a.blocks().size());
  for (const auto& m : a.blocks()) out.push_back(detail::hermitian_eigenvalues(m));
  return out;
}

std::vector<SpectralComponent> spectral_decomposition(const Element& a, const Tolerance& tol) {
  if (!is_self_adjoint(a, tol)) {
    throw Error(ErrorKind::NotSelfAdjoint, "spectral_decomposition needs a self-adjoint element");
  }
  struct Eig {
    double value;
    int block;
    Eigen::VectorXcd vec;
  };
  std::vector<Eig> all;
  for (int i = 0; i < a.num_blocks(); ++i) {
    const auto es = detail::hermitian_eigen(a.block(i));
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      all.push_back({es.eigenvalues()(j), i, es.eigenvectors().col(j)});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Eig& x, const Eig& y) { return x.value < y.value; });

  const double gap = tol.eps_eq * rel(operator_norm(a));
  std::vector<SpectralComponent> out;
  size_t start = 0;
  while (start < all.size()) {
    size_t end = start + 1;
    while (end < all.size() && all[end].value - all[end - 1].value <= gap) ++end;
    std::vector<Matrix> blocks;
    for (int n : a.algebra().block_dims()) blocks.push_back(Matrix::Zero(n, n));
    double sum = 0.0;
    for (size_t j = start; j < end; ++j) {
      blocks[static_cast<size_t>(all[j].block)] += all[j].vec * all[j].vec.adjoint();
      sum += all[j].value;
    }
    out.push_back({sum / static_cast<double>(end - start),
                   Element(a.algebra(), std::move(blocks))});
    start = end;
  }
  return out;
}

bool are_orthogonal(const Element& a, const Element& b, const Tolerance& tol) {
  require_same_algebra(a.algebra(), b.algebra(), "are_orthogonal");
  const double bound = tol.eps_eq * rel(operator_norm(a) * operator_norm(b));
  const Element as = adjoint(a);
  const Element bs = adjoint(b);
  return operator_norm(a * b) <= bound && operator_norm(b * a) <= bound &&
         operator_norm(as * b) <= bound && operator_norm(a * bs) <= bound;
}

namespace {

// Eigendecompose every block of a positive element and rebuild it with the
// eigenvalue map g applied to the eigenvalues above the rank cutoff; the
// others map to zero.
template <typename G>
Element on_support(const Element& a, const Tolerance& tol, const char* ctx, G&& g) {
  if (!is_positive(a, tol)) {
    throw Error(ErrorKind::NotPositive, std::string(ctx) + " needs a positive element");
  }
  std::vector<Eigen::SelfAdjointEigenSolver<Matrix>> solvers;
  double lmax = 0.0;
  for (const auto& m : a.blocks()) {
    solvers.push_back(detail::hermitian_eigen(m));
    if (solvers.back().eigenvalues().size() > 0) {
      lmax = std::max(lmax, solvers.back().eigenvalues().maxCoeff());
    }
  }
  const double cutoff = tol.eps_rank * lmax;
  std::vector<Matrix> blocks;
  for (size_t i = 0; i < solvers.size(); ++i) {
    const auto& es = solvers[i];
    RealVector d = es.eigenvalues();
    for (Eigen::Index j = 0; j < d.size(); ++j) {
      d(j) = (lmax > 0.0 && d(j) > cutoff) ? g(d(j)) : 0.0;
    }
    blocks.push_back(es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint());
  }
  return Element(a.algebra(), std::move(blocks));
}

}  // namespace

Element support_projection(const Element& a, const Tolerance& tol) {
  return on_support(a, tol, "support_projection", [](double) { return 1.0; });
}

Element pseudo_inverse(const Element& a, const Tolerance& tol) {
  return on_support(a, tol, "pseudo_inverse", [](double x) { return 1.0 / x; });
}

Element apply_function(const Element& a, const std::function<double(double)>& f) {
  return blockwise(a, [&f](const Matrix& m) -> Matrix {
    const auto es = detail::hermitian_eigen(m);
    RealVector d = es.eigenvalues();
    for (Eigen::Index j = 0; j < d.size(); ++j) d(j) = f(d(j));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  });
}

Element positive_sqrt(const Element& a) {
  return apply_function(a, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

Element positive_part(const Element& x) {
  return apply_function(x, [](double t) { return t > 0.0 ? t : 0.0; });
}

Element negative_part(const Element& x) {
  return apply_function(x, [](double t) { return t < 0.0 ? -t : 0.0; });
}

}  // namespace ozkit
