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

#include "ozkit/cp_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linalg.hpp"

namespace ozkit {

CpMap::CpMap(FdAlgebra domain, FdAlgebra codomain, std::vector<std::vector<Element>> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.num_blocks()) {
    throw Error(ErrorKind::InvalidMap, "image table needs one entry per domain block");
  }
  for (int i = 0; i < domain_.num_blocks(); ++i) {
    const int n = domain_.block_dim(i);
    const auto& row = images_[static_cast<size_t>(i)];
    if (static_cast<int>(row.size()) != n * n) {
      throw Error(ErrorKind::InvalidMap, "domain block " + std::to_string(i) + " needs " +
                                             std::to_string(n * n) + " images");
    }
    for (const auto& e : row) {
      if (!(e.algebra() == codomain_)) {
        throw Error(ErrorKind::InvalidMap, "image does not live in the codomain");
      }
    }
  }
}

const Element& CpMap::image(int block, int p, int q) const {
  const int n = domain_.block_dim(block);
  return images_.at(static_cast<size_t>(block)).at(static_cast<size_t>(p * n + q));
}

CpMap make_map(FdAlgebra domain, FdAlgebra codomain, std::vector<std::vector<Element>> images) {
  return CpMap(std::move(domain), std::move(codomain), std::move(images));
}

CpMap identity_map(const FdAlgebra& algebra) {
  return map_from_rule(algebra, algebra, [](const Element& e) { return e; });
}

CpMap zero_map(const FdAlgebra& domain, const FdAlgebra& codomain) {
  return map_from_rule(domain, codomain, [&](const Element&) { return Element::zero(codomain); });
}

CpMap transpose_map(const FdAlgebra& algebra) {
  return map_from_rule(algebra, algebra, [](const Element& e) {
    std::vector<Matrix> blocks;
    for (const auto& b : e.blocks()) blocks.push_back(b.transpose());
    return Element(e.algebra(), std::move(blocks));
  });
}

namespace {

template <typename F>
CpMap map_images(const CpMap& phi, const FdAlgebra& codomain, F&& f) {
  std::vector<std::vector<Element>> images;
  images.reserve(phi.images().size());
  for (const auto& row : phi.images()) {
    std::vector<Element> out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(f(e));
    images.push_back(std::move(out));
  }
  return CpMap(phi.domain(), codomain, std::move(images));
}

}  // namespace

CpMap scale(const CpMap& phi, double s) {
  return map_images(phi, phi.codomain(), [s](const Element& e) { return s * e; });
}

CpMap operator+(const CpMap& phi, const CpMap& psi) {
  require_same_algebra(phi.domain(), psi.domain(), "map sum (domain)");
  require_same_algebra(phi.codomain(), psi.codomain(), "map sum (codomain)");
  std::vector<std::vector<Element>> images;
  for (size_t i = 0; i < phi.images().size(); ++i) {
    std::vector<Element> row;
    for (size_t j = 0; j < phi.images()[i].size(); ++j) {
      row.push_back(phi.images()[i][j] + psi.images()[i][j]);
    }
    images.push_back(std::move(row));
  }
  return CpMap(phi.domain(), phi.codomain(), std::move(images));
}

Element apply(const CpMap& phi, const Element& a) {
  require_same_algebra(phi.domain(), a.algebra(), "apply");
  const FdAlgebra& cod = phi.codomain();
  std::vector<Matrix> out;
  for (int n : cod.block_dims()) out.push_back(Matrix::Zero(n, n));
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    const int n = phi.domain().block_dim(i);
    const Matrix& ai = a.block(i);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const Complex c = ai(p, q);
        if (c == Complex(0.0, 0.0)) continue;
        const Element& img = phi.image(i, p, q);
        for (int j = 0; j < cod.num_blocks(); ++j) out[static_cast<size_t>(j)] += c * img.block(j);
      }
    }
  }
  return Element(cod, std::move(out));
}

double map_distance(const CpMap& phi, const CpMap& psi) {
  require_same_algebra(phi.domain(), psi.domain(), "map_distance (domain)");
  require_same_algebra(phi.codomain(), psi.codomain(), "map_distance (codomain)");
  double best = 0.0;
  for (size_t i = 0; i < phi.images().size(); ++i) {
    for (size_t j = 0; j < phi.images()[i].size(); ++j) {
      best = std::max(best, distance(phi.images()[i][j], psi.images()[i][j]));
    }
  }
  return best;
}

std::vector<Matrix> choi_blocks(const CpMap& phi) {
  std::vector<Matrix> out;
  const int m = phi.codomain().total_size();
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    const int n = phi.domain().block_dim(i);
    Matrix c = Matrix::Zero(n * m, n * m);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) c.block(p * m, q * m, m, m) = phi.image(i, p, q).embedded();
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// The Choi matrix of domain block i restricted to codomain block j. The full
// Choi block is a direct sum of these up to a permutation, so positivity and
// Kraus data can be read off the smaller pieces.
Matrix choi_piece(const CpMap& phi, int i, int j) {
  const int n = phi.domain().block_dim(i);
  const int m = phi.codomain().block_dim(j);
  Matrix c(n * m, n * m);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) c.block(p * m, q * m, m, m) = phi.image(i, p, q).block(j);
  }
  return c;
}

}  // namespace

bool is_completely_positive(const CpMap& phi, const Tolerance& tol) {
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    for (int j = 0; j < phi.codomain().num_blocks(); ++j) {
      const Matrix c = choi_piece(phi, i, j);
      const double scale = std::max(1.0, detail::spectral_norm(c));
      if (detail::spectral_norm(c - c.adjoint()) > tol.eps_eq * scale) return false;
      if (detail::hermitian_eigenvalues(c).minCoeff() < -tol.eps_psd * scale) return false;
    }
  }
  return true;
}

KrausDecomposition kraus(const CpMap& phi, const Tolerance& tol) {
  if (!is_completely_positive(phi, tol)) {
    throw Error(ErrorKind::NotCompletelyPositive, "kraus: map is not completely positive");
  }
  const FdAlgebra& cod = phi.codomain();
  KrausDecomposition out{phi.domain(), cod, {}};
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    const int n = phi.domain().block_dim(i);
    std::vector<Eigen::SelfAdjointEigenSolver<Matrix>> pieces;
    double lmax = 0.0;
    for (int j = 0; j < cod.num_blocks(); ++j) {
      pieces.push_back(detail::hermitian_eigen(choi_piece(phi, i, j)));
      lmax = std::max(lmax, pieces.back().eigenvalues().maxCoeff());
    }
    std::vector<Matrix> ops;
    for (int j = 0; j < cod.num_blocks(); ++j) {
      const int m = cod.block_dim(j);
      const int off = cod.block_offset(j);
      const auto& es = pieces[static_cast<size_t>(j)];
      // Largest eigenvalues first so the leading operator is the dominant one.
      for (Eigen::Index e = es.eigenvalues().size() - 1; e >= 0; --e) {
        const double lambda = es.eigenvalues()(e);
        if (lmax <= 0.0 || lambda <= tol.eps_rank * lmax) continue;
        Matrix v = Matrix::Zero(cod.total_size(), n);
        const double w = std::sqrt(lambda);
        for (int p = 0; p < n; ++p) {
          for (int r = 0; r < m; ++r) v(off + r, p) = w * es.eigenvectors()(p * m + r, e);
        }
        ops.push_back(std::move(v));
      }
    }
    out.operators.push_back(std::move(ops));
  }
  return out;
}

CpMap map_from_kraus(const KrausDecomposition& k) {
  if (static_cast<int>(k.operators.size()) != k.domain.num_blocks()) {
    throw Error(ErrorKind::InvalidMap, "Kraus data needs one list per domain block");
  }
  const int total = k.codomain.total_size();
  for (int i = 0; i < k.domain.num_blocks(); ++i) {
    for (const auto& v : k.operators[static_cast<size_t>(i)]) {
      if (v.rows() != total || v.cols() != k.domain.block_dim(i)) {
        throw Error(ErrorKind::InvalidMap, "Kraus operator has the wrong shape");
      }
    }
  }
  std::vector<std::vector<Element>> images;
  for (int i = 0; i < k.domain.num_blocks(); ++i) {
    const int n = k.domain.block_dim(i);
    std::vector<Element> row;
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        // V e_pq V† = V[:, p] V[:, q]†
        Matrix acc = Matrix::Zero(total, total);
        for (const auto& v : k.operators[static_cast<size_t>(i)]) {
          acc += v.col(p) * v.col(q).adjoint();
        }
        row.push_back(Element::from_embedded(k.codomain, acc));
      }
    }
    images.push_back(std::move(row));
  }
  return CpMap(k.domain, k.codomain, std::move(images));
}

double map_norm(const CpMap& phi, const Tolerance& tol) {
  if (!is_completely_positive(phi, tol)) {
    throw Error(ErrorKind::NotCompletelyPositive, "map_norm: map is not completely positive");
  }
  return operator_norm(apply(phi, Element::unit(phi.domain())));
}

bool is_contractive(const CpMap& phi, const Tolerance& tol) {
  return map_norm(phi, tol) <= 1.0 + tol.eps_eq;
}

CpMap rescale_to_contractive(const CpMap& phi, const Tolerance& tol) {
  const double norm = map_norm(phi, tol);
  if (norm <= 1.0) return phi;
  return scale(phi, 1.0 / norm);
}

FdAlgebra tensor_algebra(const FdAlgebra& a, const FdAlgebra& b) {
  std::vector<int> dims;
  for (int n : a.block_dims()) {
    for (int m : b.block_dims()) dims.push_back(n * m);
  }
  return FdAlgebra(std::move(dims));
}

Element tensor_elements(const Element& a, const Element& b) {
  std::vector<Matrix> blocks;
  for (const auto& x : a.blocks()) {
    for (const auto& y : b.blocks()) blocks.push_back(detail::kron(x, y));
  }
  return Element(tensor_algebra(a.algebra(), b.algebra()), std::move(blocks));
}

CpMap tensor(const CpMap& phi, const CpMap& psi) {
  const FdAlgebra dom = tensor_algebra(phi.domain(), psi.domain());
  const FdAlgebra cod = tensor_algebra(phi.codomain(), psi.codomain());
  std::vector<std::vector<Element>> images;
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    const int n = phi.domain().block_dim(i);
    for (int j = 0; j < psi.domain().num_blocks(); ++j) {
      const int m = psi.domain().block_dim(j);
      std::vector<Element> row(static_cast<size_t>(n * m * n * m), Element::zero(cod));
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          const Element& x = phi.image(i, p, q);
          for (int r = 0; r < m; ++r) {
            for (int s = 0; s < m; ++s) {
              const int row_index = p * m + r;
              const int col_index = q * m + s;
              row[static_cast<size_t>(row_index * n * m + col_index)] =
                  tensor_elements(x, psi.image(j, r, s));
            }
          }
        }
      }
      images.push_back(std::move(row));
    }
  }
  return CpMap(dom, cod, std::move(images));
}

CpMap amplify(const CpMap& phi, int k) {
  if (k < 1) {
    throw Error(ErrorKind::InvalidArgument, "amplification level must be at least 1");
  }
  return tensor(identity_map(FdAlgebra({k})), phi);
}

CpMap compose(const CpMap& psi, const CpMap& phi) {
  require_same_algebra(phi.codomain(), psi.domain(), "compose");
  return map_images(phi, psi.codomain(), [&](const Element& e) { return apply(psi, e); });
}

}  // namespace ozkit
