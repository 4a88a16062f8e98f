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

#include "ozkit/generators.hpp"

#include <algorithm>
#include <string>

#include "linalg.hpp"
#include "ozkit/random.hpp"

namespace ozkit {

namespace {

// Derivation ids, fixed so fixtures stay reproducible.
constexpr std::uint64_t kUnitaryStream = 1;
constexpr std::uint64_t kWeightStream = 2;

}  // namespace

void GenSpec::validate() const {
  if (static_cast<int>(multiplicities.size()) != codomain.num_blocks()) {
    throw Error(ErrorKind::InvalidArgument, "multiplicities need one row per codomain block");
  }
  for (int j = 0; j < codomain.num_blocks(); ++j) {
    const auto& row = multiplicities[static_cast<size_t>(j)];
    if (static_cast<int>(row.size()) != domain.num_blocks()) {
      throw Error(ErrorKind::InvalidArgument, "multiplicities need one column per domain block");
    }
    int used = 0;
    for (int i = 0; i < domain.num_blocks(); ++i) {
      if (row[static_cast<size_t>(i)] < 0) {
        throw Error(ErrorKind::InvalidArgument, "multiplicities must be nonnegative");
      }
      used += row[static_cast<size_t>(i)] * domain.block_dim(i);
    }
    if (used > codomain.block_dim(j)) {
      throw Error(ErrorKind::EmbeddingTooLarge,
                  "embedding needs " + std::to_string(used) + " rows in codomain block " +
                      std::to_string(j) + " of size " + std::to_string(codomain.block_dim(j)));
    }
  }
}

namespace {

// π and h on the unrotated corners, plus the rotation per codomain block.
// Products are formed before rotating so that h·π vanishes exactly where h does.
struct Construction {
  std::vector<std::vector<std::vector<Matrix>>> pi;  // [domain block][pq][codomain block]
  std::vector<Matrix> h;                             // per codomain block
  std::vector<Matrix> u;                             // per codomain block
};

Construction build(const GenSpec& spec) {
  spec.validate();
  const FdAlgebra& dom = spec.domain;
  const FdAlgebra& cod = spec.codomain;
  const Rng root(spec.seed);
  const Rng unitary_rng = root.derive(kUnitaryStream);
  const Rng weight_rng = root.derive(kWeightStream);

  Construction c;
  c.pi.resize(static_cast<size_t>(dom.num_blocks()));
  for (int i = 0; i < dom.num_blocks(); ++i) {
    const int n = dom.block_dim(i);
    c.pi[static_cast<size_t>(i)].assign(static_cast<size_t>(n * n), {});
  }

  for (int j = 0; j < cod.num_blocks(); ++j) {
    const int m = cod.block_dim(j);
    Rng urng = unitary_rng.derive(static_cast<std::uint64_t>(j));
    const Matrix u = haar_unitary(m, urng);
    Matrix h = Matrix::Zero(m, m);
    int offset = 0;
    std::vector<std::pair<int, int>> corners;  // (offset, μ) per domain block
    for (int i = 0; i < dom.num_blocks(); ++i) {
      const int n = dom.block_dim(i);
      const int mu = spec.multiplicities[static_cast<size_t>(j)][static_cast<size_t>(i)];
      corners.emplace_back(offset, mu);
      if (mu > 0) {
        Rng wrng = weight_rng.derive(static_cast<std::uint64_t>(j * dom.num_blocks() + i));
        const Matrix w = haar_unitary(mu, wrng);
        RealVector d(mu);
        for (int e = 0; e < mu; ++e) {
          const double zero = wrng.uniform();
          const double v = wrng.uniform(0.05, 1.0);
          d(e) = (!spec.strict_h && zero < 0.25) ? 0.0 : v;
        }
        const Matrix hw = w * d.asDiagonal() * w.adjoint();
        h.block(offset, offset, n * mu, n * mu) = detail::kron(Matrix::Identity(n, n), hw);
      }
      offset += n * mu;
    }
    c.h.push_back(std::move(h));

    for (int i = 0; i < dom.num_blocks(); ++i) {
      const int n = dom.block_dim(i);
      const auto [off, mu] = corners[static_cast<size_t>(i)];
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          Matrix corner = Matrix::Zero(m, m);
          if (mu > 0) {
            Matrix e = Matrix::Zero(n, n);
            e(p, q) = 1.0;
            corner.block(off, off, n * mu, n * mu) = detail::kron(e, Matrix::Identity(mu, mu));
          }
          c.pi[static_cast<size_t>(i)][static_cast<size_t>(p * n + q)].push_back(
              std::move(corner));
        }
      }
    }
    c.u.push_back(u);
  }
  return c;
}

CpMap assemble(const GenSpec& spec, const Construction& c, bool with_h) {
  std::vector<std::vector<Element>> images;
  for (const auto& row : c.pi) {
    std::vector<Element> out;
    for (const auto& blocks : row) {
      std::vector<Matrix> rotated;
      for (size_t j = 0; j < blocks.size(); ++j) {
        const Matrix corner = with_h ? Matrix(c.h[j] * blocks[j]) : blocks[j];
        rotated.push_back(c.u[j] * corner * c.u[j].adjoint());
      }
      out.emplace_back(spec.codomain, std::move(rotated));
    }
    images.push_back(std::move(out));
  }
  return CpMap(spec.domain, spec.codomain, std::move(images));
}

}  // namespace

CpMap random_hom(const GenSpec& spec) { return assemble(spec, build(spec), false); }

CpMap random_order_zero(const GenSpec& spec) { return assemble(spec, build(spec), true); }

CpMap random_cp_map(const FdAlgebra& domain, const FdAlgebra& codomain, int kraus_count,
                    std::uint64_t seed) {
  if (kraus_count < 1) throw Error(ErrorKind::InvalidArgument, "kraus_count must be at least 1");
  Rng rng(seed);
  KrausDecomposition k{domain, codomain, {}};
  for (int n : domain.block_dims()) {
    std::vector<Matrix> ops;
    for (int j = 0; j < kraus_count; ++j) ops.push_back(ginibre(codomain.total_size(), n, rng));
    k.operators.push_back(std::move(ops));
  }
  const CpMap phi = map_from_kraus(k);
  const double norm = operator_norm(apply(phi, Element::unit(domain)));
  const double target = rng.uniform(0.5, 1.0);
  return norm > 0.0 ? scale(phi, target / norm) : phi;
}

std::pair<Element, Element> orthogonal_parts(const Element& x) {
  return {positive_part(x), negative_part(x)};
}

std::pair<Element, Element> random_orthogonal_pair(const FdAlgebra& algebra, std::uint64_t seed) {
  Rng rng(seed);
  return orthogonal_parts(random_self_adjoint(algebra, rng));
}

CpMap perturb(const CpMap& phi, double epsilon, std::uint64_t seed) {
  if (!(epsilon >= 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be nonnegative");
  if (epsilon == 0.0) return phi;
  const CpMap noise = random_cp_map(phi.domain(), phi.codomain(), 2, seed);
  const CpMap sum = phi + scale(noise, epsilon);
  const double norm = operator_norm(apply(sum, Element::unit(sum.domain())));
  return norm > 1.0 ? scale(sum, 1.0 / norm) : sum;
}

GenSpec random_gen_spec(const FdAlgebra& domain, int max_codomain_size, std::uint64_t seed,
                        bool strict_h) {
  Rng rng(seed);
  const int nd = domain.num_blocks();
  const int min_block = *std::min_element(domain.block_dims().begin(), domain.block_dims().end());
  if (max_codomain_size < min_block) {
    throw Error(ErrorKind::EmbeddingTooLarge, "codomain budget too small for any embedding");
  }
  const int wanted_blocks = rng.uniform_int(1, 2);
  int remaining = max_codomain_size;
  std::vector<int> dims;
  std::vector<std::vector<int>> mult;
  bool any = false;
  for (int j = 0; j < wanted_blocks && remaining > 0; ++j) {
    std::vector<int> row(static_cast<size_t>(nd), 0);
    int used = 0;
    for (int i = 0; i < nd; ++i) {
      const int n = domain.block_dim(i);
      const int cap = std::min(2, (remaining - used) / n);
      row[static_cast<size_t>(i)] = cap > 0 ? rng.uniform_int(0, cap) : 0;
      used += row[static_cast<size_t>(i)] * n;
    }
    if (!any && used == 0) {
      // Guarantee a nonzero map: first block that fits gets one copy.
      for (int i = 0; i < nd && used == 0; ++i) {
        if (domain.block_dim(i) <= remaining) {
          row[static_cast<size_t>(i)] = 1;
          used = domain.block_dim(i);
        }
      }
    }
    const int extra = remaining - used > 0 ? rng.uniform_int(0, 1) : 0;
    const int size = used + extra;
    if (size == 0) continue;
    any = any || used > 0;
    dims.push_back(size);
    mult.push_back(std::move(row));
    remaining -= size;
  }
  return GenSpec{domain, FdAlgebra(std::move(dims)), std::move(mult), seed, strict_h};
}

}  // namespace ozkit
