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

#include "ozkit/cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ozkit/order_zero.hpp"
#include "ozkit/random.hpp"

namespace ozkit {

Polynomial Polynomial::monomial(int degree) {
  Polynomial p;
  p.coefficients.assign(static_cast<size_t>(degree) + 1, 0.0);
  p.coefficients.back() = 1.0;
  return p;
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool Polynomial::vanishes_at_zero(double eps) const {
  return coefficients.empty() || std::abs(coefficients.front()) <= eps;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coefficients.empty() || other.coefficients.empty()) return {};
  Polynomial out;
  out.coefficients.assign(coefficients.size() + other.coefficients.size() - 1, 0.0);
  for (size_t i = 0; i < coefficients.size(); ++i) {
    for (size_t j = 0; j < other.coefficients.size(); ++j) {
      out.coefficients[i + j] += coefficients[i] * other.coefficients[j];
    }
  }
  return out;
}

ConeHomRep to_cone_hom(const CpMap& phi, const Tolerance& tol) {
  if (!is_contractive(phi, tol)) {
    throw Error(ErrorKind::NotContractive, "to_cone_hom needs a contractive map");
  }
  OrderZeroDecomposition d = decompose(phi, tol);
  double lmax = operator_norm(d.h);
  ConeHomRep rep{phi.domain(), phi.codomain(), {}, d.pi};
  for (auto& comp : spectral_decomposition(d.h, tol)) {
    if (lmax <= 0.0 || comp.eigenvalue <= tol.eps_rank * lmax) continue;
    rep.levels.push_back({std::min(comp.eigenvalue, 1.0), std::move(comp.projection)});
  }
  return rep;
}

void validate_rep(const ConeHomRep& rep, const Tolerance& tol) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidRep, why); };
  if (!(rep.pi.domain() == rep.domain) || !(rep.pi.codomain() == rep.codomain)) {
    fail("pi does not match the representation's algebras");
  }
  Element sum = Element::zero(rep.codomain);
  for (size_t j = 0; j < rep.levels.size(); ++j) {
    const auto& lv = rep.levels[j];
    if (!(lv.p.algebra() == rep.codomain)) fail("level projection in the wrong algebra");
    if (!(lv.t > 0.0) || lv.t > 1.0 + tol.eps_eq) fail("level t outside (0, 1]");
    if (j > 0 && !(lv.t > rep.levels[j - 1].t)) fail("levels must be strictly increasing");
    if (!is_projection(lv.p, tol)) fail("level " + std::to_string(j) + " is not a projection");
    for (size_t k = 0; k < j; ++k) {
      if (operator_norm(lv.p * rep.levels[k].p) > tol.eps_eq) fail("level projections overlap");
    }
    for (const auto& row : rep.pi.images()) {
      for (const auto& e : row) {
        if (operator_norm(commutator(lv.p, e)) > tol.eps_eq) {
          fail("level " + std::to_string(j) + " does not commute with pi");
        }
      }
    }
    sum = sum + lv.p;
  }
  const Element pi_unit = apply(rep.pi, Element::unit(rep.domain));
  if (distance(sum, pi_unit) > tol.eps_eq) fail("level projections do not add up to pi(1)");
}

namespace {

Element weighted_levels(const ConeHomRep& rep, const Polynomial& f) {
  Element acc = Element::zero(rep.codomain);
  for (const auto& lv : rep.levels) acc = acc + f(lv.t) * lv.p;
  return acc;
}

}  // namespace

CpMap from_cone_hom(const ConeHomRep& rep, const Tolerance& tol) {
  validate_rep(rep, tol);
  const Element h = weighted_levels(rep, Polynomial::monomial(1));
  std::vector<std::vector<Element>> images;
  for (const auto& row : rep.pi.images()) {
    std::vector<Element> out;
    for (const auto& e : row) out.push_back(h * e);
    images.push_back(std::move(out));
  }
  return CpMap(rep.domain, rep.codomain, std::move(images));
}

Element evaluate(const ConeHomRep& rep, const Polynomial& f, const Element& a) {
  if (!f.vanishes_at_zero()) {
    throw Error(ErrorKind::InvalidFunction, "cone elements need a vanishing constant term");
  }
  return weighted_levels(rep, f) * apply(rep.pi, a);
}

HomReport verify_hom(const ConeHomRep& rep, const Tolerance& tol, std::uint64_t seed) {
  constexpr int kSamples = 100;
  const Rng base(seed);
  HomReport out;
  for (int i = 0; i < kSamples; ++i) {
    Rng rng = base.derive(static_cast<std::uint64_t>(i));
    const Polynomial f = Polynomial::monomial(rng.uniform_int(1, 4));
    const Polynomial g = Polynomial::monomial(rng.uniform_int(1, 4));
    const Element a = random_element(rep.domain, rng);
    const Element b = random_element(rep.domain, rng);
    const Element lhs = evaluate(rep, f * g, a * b);
    const Element rhs = evaluate(rep, f, a) * evaluate(rep, g, b);
    const double scale = std::max(1.0, operator_norm(a) * operator_norm(b));
    out.max_defect = std::max(out.max_defect, distance(lhs, rhs) / scale);
  }
  out.passed = out.max_defect <= tol.eps_eq;
  return out;
}

}  // namespace ozkit
