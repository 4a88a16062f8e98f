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

#include "ozkit/cuntz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "linalg.hpp"
#include "ozkit/order_zero.hpp"

namespace ozkit {

std::vector<int> CuntzMorphism::operator()(const std::vector<int>& ranks) const {
  std::vector<int> out;
  out.reserve(T.size());
  for (const auto& row : T) {
    if (row.size() != ranks.size()) {
      throw Error(ErrorKind::AlgebraMismatch, "rank vector does not match the morphism");
    }
    out.push_back(std::inner_product(row.begin(), row.end(), ranks.begin(), 0));
  }
  return out;
}

FdAlgebra amplified_algebra(const FdAlgebra& base, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "amplification level must be at least 1");
  std::vector<int> dims;
  for (int n : base.block_dims()) dims.push_back(k * n);
  return FdAlgebra(std::move(dims));
}

namespace {

std::vector<int> rank_vector(const Element& a, const Tolerance& tol) {
  const auto eigs = block_eigenvalues(a);
  double lmax = 0.0;
  for (const auto& e : eigs) {
    if (e.size() > 0) lmax = std::max(lmax, e.cwiseAbs().maxCoeff());
  }
  std::vector<int> ranks;
  for (const auto& e : eigs) {
    int r = 0;
    if (lmax > 0.0) {
      for (Eigen::Index j = 0; j < e.size(); ++j) r += e(j) > tol.eps_rank * lmax ? 1 : 0;
    }
    ranks.push_back(r);
  }
  return ranks;
}

}  // namespace

CuntzClass cuntz_class(const Element& a, int k, const Tolerance& tol) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "amplification level must be at least 1");
  std::vector<int> base;
  for (int n : a.algebra().block_dims()) {
    if (n % k != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "block size " + std::to_string(n) + " is not a multiple of k = " +
                      std::to_string(k));
    }
    base.push_back(n / k);
  }
  if (!is_positive(a, tol)) throw Error(ErrorKind::NotPositive, "cuntz_class needs a positive element");
  return CuntzClass{FdAlgebra(std::move(base)), k, rank_vector(a, tol)};
}

bool subequivalent(const CuntzClass& c1, const CuntzClass& c2) {
  if (!(c1.algebra == c2.algebra) || c1.k != c2.k || c1.ranks.size() != c2.ranks.size()) {
    throw Error(ErrorKind::AlgebraMismatch, "Cuntz classes live in different algebras or levels");
  }
  for (size_t i = 0; i < c1.ranks.size(); ++i) {
    if (c1.ranks[i] > c2.ranks[i]) return false;
  }
  return true;
}

CuntzClass normalize_level(const CuntzClass& c, int k_to) {
  if (k_to < c.k) throw Error(ErrorKind::InvalidArgument, "cannot lower the amplification level");
  return CuntzClass{c.algebra, k_to, c.ranks};
}

CuntzClass add(const CuntzClass& c1, const CuntzClass& c2) {
  if (!(c1.algebra == c2.algebra)) {
    throw Error(ErrorKind::AlgebraMismatch, "Cuntz classes live in different algebras");
  }
  CuntzClass out{c1.algebra, c1.k + c2.k, c1.ranks};
  for (size_t i = 0; i < out.ranks.size(); ++i) out.ranks[i] += c2.ranks[i];
  return out;
}

CuntzWitness construct_witness(const Element& a, const Element& b, double delta,
                               const Tolerance& tol) {
  require_same_algebra(a.algebra(), b.algebra(), "construct_witness");
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  if (!is_positive(a, tol) || !is_positive(b, tol)) {
    throw Error(ErrorKind::NotPositive, "construct_witness needs positive elements");
  }
  const std::vector<int> ra = rank_vector(a, tol);
  const std::vector<int> rb = rank_vector(b, tol);
  for (size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] > rb[i]) {
      throw Error(ErrorKind::NotSubequivalent,
                  "rank of a exceeds rank of b in block " + std::to_string(i));
    }
  }

  const double a_cut = tol.eps_rank * operator_norm(a);
  std::vector<Matrix> xs;
  for (int i = 0; i < a.num_blocks(); ++i) {
    const int n = a.algebra().block_dim(i);
    const auto ea = detail::hermitian_eigen(a.block(i));
    const auto eb = detail::hermitian_eigen(b.block(i));

    // Eigenvectors of b above δ, largest eigenvalue first, ties by index.
    std::vector<Eigen::Index> top;
    for (Eigen::Index j = 0; j < eb.eigenvalues().size(); ++j) {
      if (eb.eigenvalues()(j) > delta) top.push_back(j);
    }
    std::stable_sort(top.begin(), top.end(), [&](Eigen::Index x, Eigen::Index y) {
      return eb.eigenvalues()(x) > eb.eigenvalues()(y);
    });

    Matrix x = Matrix::Zero(n, n);
    size_t used = 0;
    for (Eigen::Index j = ea.eigenvalues().size() - 1; j >= 0; --j) {
      const double alpha = ea.eigenvalues()(j);
      if (alpha <= a_cut) continue;
      if (used == top.size()) {
        throw Error(ErrorKind::DeltaTooLarge,
                    "b has too few eigenvalues above delta in block " + std::to_string(i));
      }
      const Eigen::Index w = top[used++];
      const double beta = eb.eigenvalues()(w);
      x += std::sqrt(alpha / beta) * eb.eigenvectors().col(w) * ea.eigenvectors().col(j).adjoint();
    }
    xs.push_back(std::move(x));
  }
  Element x(a.algebra(), std::move(xs));
  const double residual = distance(a, adjoint(x) * b * x);
  return CuntzWitness{std::move(x), residual};
}

CuntzMorphism induced_morphism(const CpMap& phi, const Tolerance& tol) {
  const OrderZeroDecomposition d = decompose(phi, tol);
  const FdAlgebra& dom = phi.domain();
  const FdAlgebra& cod = phi.codomain();
  CuntzMorphism m;
  m.T.assign(static_cast<size_t>(cod.num_blocks()),
             std::vector<int>(static_cast<size_t>(dom.num_blocks()), 0));
  for (int i = 0; i < dom.num_blocks(); ++i) {
    // π(e_11) is a verified projection, so its rank is its trace.
    const Element& q = d.pi.image(i, 0, 0);
    for (int j = 0; j < cod.num_blocks(); ++j) {
      m.T[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          static_cast<int>(std::lround(q.block(j).trace().real()));
    }
  }
  return m;
}

}  // namespace ozkit
