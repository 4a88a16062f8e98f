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

#include "ozkit/random.hpp"

#include <cmath>
#include <numbers>

namespace ozkit {

double Rng::normal() {
  // 1 − u keeps the argument of log in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Matrix ginibre(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  }
  return m;
}

Matrix haar_unitary(int n, Rng& rng) {
  const Matrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(j) *= d / ad;
  }
  return q;
}

Element random_element(const FdAlgebra& algebra, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) blocks.push_back(ginibre(n, n, rng));
  return Element(algebra, std::move(blocks));
}

Element random_self_adjoint(const FdAlgebra& algebra, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) {
    const Matrix g = ginibre(n, n, rng);
    blocks.push_back(0.5 * (g + g.adjoint()));
  }
  return Element(algebra, std::move(blocks));
}

Element random_positive(const FdAlgebra& algebra, Rng& rng, double lo, double hi,
                        double zero_prob) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) {
    const Matrix u = haar_unitary(n, rng);
    RealVector d(n);
    for (int j = 0; j < n; ++j) {
      const double zero = rng.uniform();
      const double v = rng.uniform(lo, hi);
      d(j) = zero < zero_prob ? 0.0 : v;
    }
    blocks.push_back(u * d.asDiagonal() * u.adjoint());
  }
  return Element(algebra, std::move(blocks));
}

}  // namespace ozkit
