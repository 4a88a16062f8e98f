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

#include "ozkit/traces.hpp"

#include <algorithm>
#include <cmath>

namespace ozkit {

TracialFunctional::TracialFunctional(FdAlgebra algebra, std::vector<double> weights)
    : algebra_(std::move(algebra)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != algebra_.num_blocks()) {
    throw Error(ErrorKind::InvalidArgument, "trace needs one weight per block");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw Error(ErrorKind::InvalidArgument, "trace weights must be nonnegative");
  }
}

TracialFunctional TracialFunctional::trace(const FdAlgebra& algebra) {
  return TracialFunctional(algebra, std::vector<double>(static_cast<size_t>(algebra.num_blocks()), 1.0));
}

Complex apply_trace(const TracialFunctional& tau, const Element& a) {
  require_same_algebra(tau.algebra(), a.algebra(), "apply_trace");
  Complex acc = 0.0;
  for (int i = 0; i < a.num_blocks(); ++i) acc += tau.weights()[static_cast<size_t>(i)] * a.block(i).trace();
  return acc;
}

Complex apply_functional(const LinearFunctional& l, const Element& a) {
  require_same_algebra(l.algebra, a.algebra(), "apply_functional");
  Complex acc = 0.0;
  for (int i = 0; i < a.num_blocks(); ++i) {
    acc += l.coefficients[static_cast<size_t>(i)].cwiseProduct(a.block(i)).sum();
  }
  return acc;
}

LinearFunctional compose_with_map(const TracialFunctional& tau, const CpMap& phi) {
  require_same_algebra(tau.algebra(), phi.codomain(), "compose_with_map");
  LinearFunctional out{phi.domain(), {}};
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    const int n = phi.domain().block_dim(i);
    Matrix c(n, n);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) c(p, q) = apply_trace(tau, phi.image(i, p, q));
    }
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

std::optional<TracialFunctional> is_tracial(const LinearFunctional& l, const Tolerance& tol) {
  double scale = 1.0;
  for (const auto& c : l.coefficients) {
    if (c.size() > 0) scale = std::max(scale, c.cwiseAbs().maxCoeff());
  }
  const double eps = tol.eps_eq * scale;
  std::vector<double> weights;
  for (const auto& c : l.coefficients) {
    const Complex w = c(0, 0);
    for (Eigen::Index p = 0; p < c.rows(); ++p) {
      for (Eigen::Index q = 0; q < c.cols(); ++q) {
        const Complex expected = p == q ? w : Complex(0.0, 0.0);
        if (std::abs(c(p, q) - expected) > eps) return std::nullopt;
      }
    }
    if (std::abs(w.imag()) > eps || w.real() < -eps) return std::nullopt;
    weights.push_back(std::max(w.real(), 0.0));
  }
  return TracialFunctional(l.algebra, std::move(weights));
}

}  // namespace ozkit
