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

#include <cstdint>

#include "ozkit/algebra.hpp"

namespace ozkit {

// Counter-based 64-bit generator. Draw i of a stream with key K is
//
//   mix64(K + (i + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer. Seeding sets K = mix64(seed);
// derive(id) starts an independent child stream with key
// mix64(K ^ mix64(id + 0x9E3779B97F4A7C15)), so every instance of a suite
// can be addressed by a path of ids regardless of evaluation order.
//
// Doubles take the top 53 bits; normals use Box-Muller on two fresh
// uniforms per call. No state is shared with <random>, whose distributions
// are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix64(seed)) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  Rng derive(std::uint64_t id) const {
    Rng child(0);
    child.key_ = mix64(key_ ^ mix64(id + kGamma));
    return child;
  }

  std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next_u64() % span);
  }
  double normal();
  Complex complex_normal();

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Entries i.i.d. standard complex normal.
Matrix ginibre(int rows, int cols, Rng& rng);
// Haar unitary (QR of a Ginibre matrix with the phase convention fixed).
Matrix haar_unitary(int n, Rng& rng);

Element random_element(const FdAlgebra& algebra, Rng& rng);
// Hermitian part of a Ginibre element.
Element random_self_adjoint(const FdAlgebra& algebra, Rng& rng);
// U diag(λ) U† per block, λ uniform in [lo, hi]; each eigenvalue is set to 0
// with probability zero_prob.
Element random_positive(const FdAlgebra& algebra, Rng& rng, double lo = 0.1, double hi = 1.0,
                        double zero_prob = 0.0);

}  // namespace ozkit
