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

#include <initializer_list>

#include "ozkit/algebra.hpp"

namespace testutil {

using ozkit::Complex;
using ozkit::Element;
using ozkit::FdAlgebra;
using ozkit::Matrix;

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Matrix diag(std::initializer_list<double> d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

// Single-block element.
inline Element single(const Matrix& m) {
  return Element(FdAlgebra({static_cast<int>(m.rows())}), {m});
}

// Element of ℂ⊕...⊕ℂ.
inline Element scalars(std::initializer_list<double> v) {
  std::vector<Matrix> blocks;
  for (double x : v) blocks.push_back(Matrix::Constant(1, 1, x));
  return Element(FdAlgebra(std::vector<int>(v.size(), 1)), std::move(blocks));
}

}  // namespace testutil
