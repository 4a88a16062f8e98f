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

#include "ozkit/order_zero.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linalg.hpp"
#include "ozkit/random.hpp"

namespace ozkit {

namespace {

constexpr int kWitnessSamples = 64;

double rel(double x) { return std::max(1.0, x); }

}  // namespace

double DecompositionReport::max_residual() const {
  return std::max({reconstruction, multiplicativity, commutator, norm_gap, support});
}

DecompositionReport verify_decomposition(const CpMap& phi, const OrderZeroDecomposition& d,
                                         const Tolerance& tol) {
  require_same_algebra(phi.domain(), d.pi.domain(), "verify_decomposition (domain)");
  require_same_algebra(phi.codomain(), d.pi.codomain(), "verify_decomposition (codomain)");
  require_same_algebra(phi.codomain(), d.h.algebra(), "verify_decomposition (h)");
  require_same_algebra(phi.codomain(), d.s.algebra(), "verify_decomposition (s)");

  DecompositionReport r;
  const FdAlgebra& dom = phi.domain();
  const CpMap& pi = d.pi;

  for (int i = 0; i < dom.num_blocks(); ++i) {
    const int n = dom.block_dim(i);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const Element& pe = pi.image(i, p, q);
        r.reconstruction = std::max(r.reconstruction, distance(d.h * pe, phi.image(i, p, q)));
        r.commutator = std::max(r.commutator, operator_norm(commutator(d.h, pe)));
        r.multiplicativity =
            std::max(r.multiplicativity, distance(adjoint(pe), pi.image(i, q, p)));
        // π(e_p1)π(e_1q) = π(e_pq)
        r.multiplicativity = std::max(
            r.multiplicativity, distance(pi.image(i, p, 0) * pi.image(i, 0, q), pe));
        // π(e_1p)π(e_q1) = δ_pq π(e_11)
        const Element prod = pi.image(i, 0, p) * pi.image(i, q, 0);
        r.multiplicativity =
            std::max(r.multiplicativity, p == q ? distance(prod, pi.image(i, 0, 0))
                                                : operator_norm(prod));
      }
    }
    for (int j = 0; j < dom.num_blocks(); ++j) {
      if (j == i) continue;
      r.multiplicativity = std::max(
          r.multiplicativity, operator_norm(pi.image(i, 0, 0) * pi.image(j, 0, 0)));
    }
  }

  const Element pi_unit = apply(pi, Element::unit(dom));
  r.support = distance(pi_unit, d.s);
  r.h_positive = is_positive(d.h, tol);

  const double phi_norm = operator_norm(apply(phi, Element::unit(dom)));
  const double h_norm = operator_norm(d.h);
  r.norm_gap = std::abs(h_norm - phi_norm);

  r.reconstruction_ok = r.reconstruction <= tol.eps_eq * rel(phi_norm);
  r.multiplicativity_ok = r.multiplicativity <= tol.eps_eq;
  r.commutator_ok = r.commutator <= tol.eps_eq * rel(h_norm);
  r.norm_ok = r.norm_gap <= tol.eps_eq * rel(phi_norm);
  r.support_ok = r.support <= tol.eps_eq;
  return r;
}

std::optional<OrderZeroWitness> find_witness(const CpMap& phi, const Tolerance& tol,
                                             std::uint64_t seed) {
  const FdAlgebra& dom = phi.domain();
  const Rng base(seed);

  auto violation = [&](const Element& a, const Element& b) -> std::optional<OrderZeroWitness> {
    const double v = operator_norm(apply(phi, a) * apply(phi, b));
    if (v > tol.eps_eq * rel(operator_norm(a) * operator_norm(b))) {
      return OrderZeroWitness{a, b, v};
    }
    return std::nullopt;
  };

  for (int sample = 0; sample < kWitnessSamples; ++sample) {
    Rng rng = base.derive(static_cast<std::uint64_t>(sample));
    const Element x = random_self_adjoint(dom, rng);

    const Element xp = positive_part(x);
    const Element xm = negative_part(x);
    if (auto w = violation(xp, xm)) return w;

    // Rank-one eigenprojections of x; φ of each computed once.
    std::vector<Element> projections;
    for (int i = 0; i < dom.num_blocks(); ++i) {
      const auto es = detail::hermitian_eigen(x.block(i));
      for (Eigen::Index c = 0; c < es.eigenvectors().cols(); ++c) {
        std::vector<Matrix> blocks;
        for (int n : dom.block_dims()) blocks.push_back(Matrix::Zero(n, n));
        blocks[static_cast<size_t>(i)] = es.eigenvectors().col(c) * es.eigenvectors().col(c).adjoint();
        projections.emplace_back(dom, std::move(blocks));
      }
    }
    std::vector<Element> images;
    images.reserve(projections.size());
    for (const auto& p : projections) images.push_back(apply(phi, p));
    for (size_t a = 0; a < projections.size(); ++a) {
      for (size_t b = a + 1; b < projections.size(); ++b) {
        const double v = operator_norm(images[a] * images[b]);
        if (v > tol.eps_eq) return OrderZeroWitness{projections[a], projections[b], v};
      }
    }
  }
  return std::nullopt;
}

OrderZeroDecomposition structure_candidate(const CpMap& phi, const Tolerance& tol) {
  tol.validate();
  if (!is_completely_positive(phi, tol)) {
    throw Error(ErrorKind::NotCompletelyPositive, "map is not completely positive");
  }
  const Element h = apply(phi, Element::unit(phi.domain()));
  const Element s = support_projection(h, tol);
  const Element h_inv = pseudo_inverse(h, tol);

  std::vector<std::vector<Element>> pi_images;
  for (const auto& row : phi.images()) {
    std::vector<Element> out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(h_inv * e);
    pi_images.push_back(std::move(out));
  }
  return OrderZeroDecomposition{h, CpMap(phi.domain(), phi.codomain(), std::move(pi_images)), s};
}

OrderZeroDecomposition decompose(const CpMap& phi, const Tolerance& tol, std::uint64_t seed) {
  OrderZeroDecomposition d = structure_candidate(phi, tol);
  const DecompositionReport report = verify_decomposition(phi, d, tol);
  if (!report.passed()) {
    std::ostringstream msg;
    msg << "map is not order zero (reconstruction " << report.reconstruction
        << ", multiplicativity " << report.multiplicativity << ", commutator "
        << report.commutator << ")";
    throw NotOrderZeroError(msg.str(), find_witness(phi, tol, seed));
  }
  return d;
}

OrderZeroResult is_order_zero(const CpMap& phi, const Tolerance& tol, std::uint64_t seed) {
  OrderZeroResult out;
  try {
    out.decomposition = decompose(phi, tol, seed);
    out.order_zero = true;
  } catch (const NotOrderZeroError& e) {
    out.witness = e.witness();
  }
  return out;
}

CpMap functional_calculus(const CpMap& phi, const std::function<double(double)>& f,
                          const Tolerance& tol) {
  if (std::abs(f(0.0)) > tol.eps_eq) {
    throw Error(ErrorKind::InvalidFunction, "functional calculus needs f(0) = 0");
  }
  const OrderZeroDecomposition d = decompose(phi, tol);
  const double h_norm = operator_norm(d.h);

  Element fh = Element::zero(phi.codomain());
  for (const auto& comp : spectral_decomposition(d.h, tol)) {
    const double t = std::clamp(comp.eigenvalue, 0.0, h_norm);
    const double ft = f(t);
    if (!std::isfinite(ft) || ft < -tol.eps_psd) {
      std::ostringstream msg;
      msg << "f is negative or undefined on the spectrum (f(" << t << ") = " << ft << ")";
      throw Error(ErrorKind::InvalidFunction, msg.str());
    }
    fh = fh + ft * comp.projection;
  }

  std::vector<std::vector<Element>> images;
  for (const auto& row : d.pi.images()) {
    std::vector<Element> out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(fh * e);
    images.push_back(std::move(out));
  }
  return CpMap(phi.domain(), phi.codomain(), std::move(images));
}

}  // namespace ozkit
