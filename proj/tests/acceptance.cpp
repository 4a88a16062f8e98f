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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   ozkit_acceptance GOLDEN_DIR
//
// With OZKIT_REGEN_GOLDEN set, the CLI golden files are rewritten instead of
// compared.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "ozkit/cli.hpp"
#include "ozkit/cone.hpp"
#include "ozkit/cuntz.hpp"
#include "ozkit/errors.hpp"
#include "ozkit/generators.hpp"
#include "ozkit/json_io.hpp"
#include "ozkit/order_zero.hpp"
#include "ozkit/random.hpp"
#include "ozkit/traces.hpp"

using namespace ozkit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const std::vector<std::vector<int>> kDomains = {{1}, {2}, {1, 1}, {2, 3}, {3, 3}};

FdAlgebra pick_domain(Rng& rng, const std::vector<std::vector<int>>& pool) {
  return FdAlgebra(pool[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))]);
}

CpMap order_zero_instance(std::uint64_t seed, const std::vector<std::vector<int>>& pool,
                          int max_size) {
  Rng rng(seed);
  const FdAlgebra dom = pick_domain(rng, pool);
  return random_order_zero(random_gen_spec(dom, max_size, seed, seed % 2 == 0));
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double min_eigenvalue(const Element& e) {
  double lo = 0.0;
  bool first = true;
  for (const auto& b : e.blocks()) {
    const double v = min_eigenvalue(b);
    lo = first ? v : std::min(lo, v);
    first = false;
  }
  return lo;
}

// 1. Structure theorem round trip.
Outcome ac1() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int failures = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const CpMap phi = order_zero_instance(100000 + s, kDomains, 9);
    try {
      const auto d = decompose(phi);
      const auto r = verify_decomposition(phi, d);
      const double m = std::max({r.reconstruction, r.multiplicativity, r.commutator, r.norm_gap});
      worst = std::max(worst, m);
      failures += m > 1e-8;
    } catch (const Error&) {
      ++failures;
    }
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs <= 60.0,
          fmt("1000 maps, %d failures, max residual %.2e, %.1f s (limit 60 s)", failures, worst,
              secs)};
}

// 2. Detector soundness and completeness.
Outcome ac2() {
  int accepted = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const CpMap phi = order_zero_instance(200000 + s, kDomains, 9);
    accepted += is_order_zero(phi).order_zero;
  }

  // A map out of ℂ is always order zero, so negatives use domains with room
  // for orthogonal pairs.
  const std::vector<std::vector<int>> neg_domains = {{2}, {1, 1}, {2, 3}, {3, 3}};
  int rejected = 0;
  int valid_witness = 0;
  const Tolerance tol;
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(300000 + s);
    const FdAlgebra dom = pick_domain(rng, neg_domains);
    CpMap phi = identity_map(dom);
    if (s % 2 == 0) {
      phi = perturb(random_order_zero(random_gen_spec(dom, 9, 300000 + s, s % 4 == 0)), 0.05, s);
    } else {
      phi = random_cp_map(dom, FdAlgebra({rng.uniform_int(2, 6)}), 2, 300000 + s);
    }
    const auto res = is_order_zero(phi, tol, s);
    if (res.order_zero) continue;
    ++rejected;
    if (!res.witness) continue;
    const auto& w = *res.witness;
    // Independent re-verification of the witness.
    const bool positive = oracle::psd(w.a.embedded(), 1e-10) && oracle::psd(w.b.embedded(), 1e-10);
    const bool orth = oracle::orthogonality_defect(w.a, w.b) <=
                      1e-8 * std::max(1.0, oracle::frob(w.a) * oracle::frob(w.b));
    const Matrix prod = oracle::apply_by_linearity(phi, w.a) * oracle::apply_by_linearity(phi, w.b);
    const double violation = Eigen::JacobiSVD<Matrix>(prod).singularValues()(0);
    valid_witness += positive && orth && violation >= tol.eps_eq;
  }
  return {accepted == 1000 && rejected == 500 && valid_witness == 500,
          fmt("positives accepted %d/1000, negatives rejected %d/500, valid witnesses %d/500",
              accepted, rejected, valid_witness)};
}

// 3. Schwarz inequality.
Outcome ac3() {
  double floor_lo = 0.0;
  double floor_gap = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Rng rng(400000 + s);
    const FdAlgebra dom = pick_domain(rng, kDomains);
    CpMap phi = identity_map(dom);
    if (s % 2 == 0) {
      phi = random_cp_map(dom, FdAlgebra({rng.uniform_int(1, 4), rng.uniform_int(1, 3)}),
                          rng.uniform_int(1, 3), 400000 + s);
    } else {
      phi = random_order_zero(random_gen_spec(dom, 9, 400000 + s));
    }
    phi = rescale_to_contractive(phi);
    const Element a = random_element(dom, rng);
    const Element pa = apply(phi, a);
    const Element lower = adjoint(pa) * pa;
    floor_lo = std::min(floor_lo, min_eigenvalue(lower));
    floor_gap = std::min(floor_gap, min_eigenvalue(apply(phi, adjoint(a) * a) - lower));
  }
  return {floor_lo >= -1e-8 && floor_gap >= -1e-8,
          fmt("1000 pairs, min eig of phi(a)*phi(a) %.2e, of phi(a*a)-phi(a)*phi(a) %.2e "
              "(floor -1e-8)",
              floor_lo, floor_gap)};
}

// 4. Cone bijection.
Outcome ac4() {
  double round = 0.0;
  double hom = 0.0;
  double eval = 0.0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const CpMap phi = order_zero_instance(500000 + s, kDomains, 9);
    const auto rep = to_cone_hom(phi);
    round = std::max(round, map_distance(from_cone_hom(rep), phi));
    hom = std::max(hom, verify_hom(rep, {}, s).max_defect);
    Rng rng(s);
    const Element a = random_element(phi.domain(), rng);
    for (int deg = 1; deg <= 4; ++deg) {
      const CpMap f = functional_calculus(phi, [deg](double t) { return std::pow(t, deg); });
      eval = std::max(eval, distance(evaluate(rep, Polynomial::monomial(deg), a), apply(f, a)));
    }
  }
  return {round <= 1e-8 && hom <= 1e-8 && eval <= 1e-8,
          fmt("500 maps, round trip %.2e, hom defect %.2e, evaluate vs calculus %.2e", round, hom,
              eval)};
}

// 5. Tensor corollary.
Outcome ac5() {
  const auto t0 = Clock::now();
  const std::vector<std::vector<int>> small = {{1}, {2}, {1, 1}};
  int tensor_ok = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const CpMap phi = order_zero_instance(600000 + 2 * s, small, 4);
    const CpMap psi = order_zero_instance(600001 + 2 * s, small, 4);
    tensor_ok += is_order_zero(tensor(phi, psi)).order_zero;
  }
  int amp_ok = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const CpMap phi = order_zero_instance(700000 + s, kDomains, 6);
    amp_ok += is_order_zero(amplify(phi, 1 + static_cast<int>(s % 3))).order_zero;
  }
  const double secs = seconds_since(t0);
  return {tensor_ok == 200 && amp_ok == 200 && secs <= 120.0,
          fmt("tensors %d/200, amplifications %d/200, %.1f s (limit 120 s)", tensor_ok, amp_ok,
              secs)};
}

// 6. Trace corollary.
Outcome ac6() {
  int tracial = 0;
  double comm = 0.0;
  double root_identity = 0.0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(800000 + s);
    const CpMap phi = order_zero_instance(800000 + s, kDomains, 9);
    std::vector<double> w;
    for (int j = 0; j < phi.codomain().num_blocks(); ++j) w.push_back(rng.uniform(0.0, 2.0));
    const TracialFunctional tau(phi.codomain(), w);
    const auto l = compose_with_map(tau, phi);
    tracial += is_tracial(l).has_value();
    const CpMap root = functional_calculus(phi, [](double t) { return std::sqrt(t); });
    for (int k = 0; k < 100; ++k) {
      const Element a = random_element(phi.domain(), rng);
      const Element b = random_element(phi.domain(), rng);
      const Complex ab = apply_trace(tau, apply(phi, a * b));
      comm = std::max(comm, std::abs(ab - apply_trace(tau, apply(phi, b * a))));
      root_identity =
          std::max(root_identity, std::abs(ab - apply_trace(tau, apply(root, a) * apply(root, b))));
    }
  }
  return {tracial == 500 && comm <= 1e-8 && root_identity <= 1e-8,
          fmt("tracial %d/500, max |tau phi(ab) - tau phi(ba)| %.2e, root identity %.2e", tracial,
              comm, root_identity)};
}

// 7. Cuntz corollary.
Outcome ac7() {
  const std::vector<std::vector<int>> pool = {{1}, {2}, {1, 1}, {2, 1}};
  int linear_ok = 0;
  int monotone_ok = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(900000 + s);
    const FdAlgebra dom = pick_domain(rng, pool);
    const int k = rng.uniform_int(1, 3);
    const CpMap phi = random_order_zero(random_gen_spec(dom, 6, 900000 + s, s % 2 == 0));
    const CpMap amp = amplify(phi, k);
    const FdAlgebra big = amplified_algebra(dom, k);
    const CuntzMorphism T = induced_morphism(phi);

    const Element a = random_positive(big, rng, 0.1, 1.0, 0.4);
    linear_ok += cuntz_class(apply(amp, a), k).ranks == T(cuntz_class(a, k).ranks);

    const Element b = random_positive(big, rng, 0.1, 1.0, 0.3);
    const Element r = random_positive(big, rng, 0.1, 1.0, 0.5);
    const Element sb = positive_sqrt(b);
    const Element c0 = sb * r * sb;
    const Element c = 0.5 * (c0 + adjoint(c0));  // c ≾ b
    const bool pre = subequivalent(cuntz_class(c, k), cuntz_class(b, k));
    monotone_ok += pre && subequivalent(cuntz_class(apply(amp, c), k), cuntz_class(apply(amp, b), k));
  }

  // Witness residuals over a δ-halving sequence.
  int witness_ok = 0;
  double worst_ratio = 0.0;
  const FdAlgebra alg({2, 3});
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(950000 + s);
    const Element b = random_positive(alg, rng, 0.01, 1.0, 0.3);
    const Element q = support_projection(b);
    const Element a0 = q * random_positive(alg, rng, 0.1, 1.0, 0.3) * q;
    const Element a = 0.5 * (a0 + adjoint(a0));
    const double bound = 1e-3 * (1.0 + operator_norm(a));
    bool ok = true;
    double delta = 1e-3;
    for (int j = 0; j <= 4; ++j, delta *= 0.5) {
      const double res = construct_witness(a, b, delta).residual;
      const double envelope = j == 0 ? bound : 4.0 * bound / std::ldexp(1.0, j);
      ok = ok && res <= envelope;
      worst_ratio = std::max(worst_ratio, res / envelope);
    }
    witness_ok += ok;
  }
  return {linear_ok == 500 && monotone_ok == 500 && witness_ok == 100,
          fmt("linear formula %d/500, monotone %d/500, witness halving %d/100 (worst "
              "residual/envelope %.2e)",
              linear_ok, monotone_ok, witness_ok, worst_ratio)};
}

// 8. Rank comparison against explicit witnesses on an exhaustive grid.
Outcome ac8() {
  const std::vector<std::vector<int>> algebras = {{1}, {2}, {3}, {1, 1}, {2, 1}};
  const double values[] = {0.0, 0.5, 1.0};
  int agree = 0;
  int total = 0;
  for (const auto& dims : algebras) {
    const FdAlgebra alg(dims);
    const int size = alg.total_size();
    int count = 1;
    for (int i = 0; i < size; ++i) count *= 3;
    auto make = [&](int code) {
      std::vector<Matrix> blocks;
      for (int i = 0; i < alg.num_blocks(); ++i) {
        const int n = alg.block_dim(i);
        Matrix m = Matrix::Zero(n, n);
        for (int p = 0; p < n; ++p) {
          m(p, p) = values[code % 3];
          code /= 3;
        }
        blocks.push_back(m);
      }
      return Element(alg, std::move(blocks));
    };
    // Oracle: count nonzero diagonal entries per block.
    auto ranks = [&](const Element& e) {
      std::vector<int> r;
      for (const auto& b : e.blocks()) {
        int c = 0;
        for (Eigen::Index p = 0; p < b.rows(); ++p) c += b(p, p).real() != 0.0;
        r.push_back(c);
      }
      return r;
    };
    for (int x = 0; x < count; ++x) {
      for (int y = 0; y < count; ++y) {
        const Element a = make(x);
        const Element b = make(y);
        const auto ra = ranks(a);
        const auto rb = ranks(b);
        bool dominated = true;
        for (size_t i = 0; i < ra.size(); ++i) dominated = dominated && ra[i] <= rb[i];
        const bool by_rank = subequivalent(cuntz_class(a), cuntz_class(b));
        bool witness = false;
        try {
          const auto w = construct_witness(a, b, 1e-3);
          witness = w.residual <= 1e-8;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotSubequivalent && e.kind() != ErrorKind::DeltaTooLarge) {
            throw;
          }
        }
        ++total;
        agree += by_rank == witness && by_rank == dominated;
      }
    }
  }
  return {agree == total, fmt("%d/%d grid pairs agree", agree, total)};
}

// 9. CLI golden files.
struct Invocation {
  std::string name;
  std::vector<std::string> args;
  std::string output;  // artifact written by the invocation, if any
};

std::vector<Invocation> golden_suite() {
  return {
      {"01_gen_oz", {"gen", "--kind", "oz", "--seed", "42", "-o", "oz42.json"}, "oz42.json"},
      {"02_gen_hom",
       {"gen", "--kind", "hom", "--domain", "1,1", "--codomain", "3", "--mult", "1,2", "--seed",
        "7", "-o", "hom.json"},
       "hom.json"},
      {"03_gen_cp",
       {"gen", "--kind", "cp", "--domain", "2", "--codomain", "2", "--kraus", "2", "--seed", "3",
        "-o", "cp.json"},
       "cp.json"},
      {"04_gen_oz_loose",
       {"gen", "--kind", "oz", "--domain", "2,1", "--seed", "11", "--loose", "-o", "ozl.json"},
       "ozl.json"},
      {"05_check_cp_oz", {"check-cp", "oz42.json"}, ""},
      {"06_check_cp_cp", {"check-cp", "cp.json"}, ""},
      {"07_check_oz_oz", {"check-oz", "oz42.json"}, ""},
      {"08_check_oz_cp", {"check-oz", "cp.json", "--witness", "--seed", "5"}, ""},
      {"09_check_oz_loose", {"check-oz", "ozl.json"}, ""},
      {"10_decompose", {"decompose", "oz42.json", "-o", "dec.json"}, "dec.json"},
      {"11_decompose_fail", {"decompose", "cp.json", "-o", "never.json"}, "never.json"},
      {"12_fcalc", {"fcalc", "oz42.json", "--poly", "0,1", "-o", "sq.json"}, "sq.json"},
      {"13_tensor", {"tensor", "hom.json", "hom.json", "-o", "t.json"}, "t.json"},
      {"14_amplify", {"amplify", "hom.json", "-k", "2", "-o", "amp.json"}, "amp.json"},
      {"15_cuntz_map_loose", {"cuntz-map", "ozl.json"}, ""},
      {"16_cuntz_map_hom", {"cuntz-map", "hom.json"}, ""},
      {"17_trace_compose", {"trace-compose", "hom.json", "--weights", "1"}, ""},
      {"18_cone_to", {"cone", "to", "ozl.json", "-o", "cone.json"}, "cone.json"},
      {"19_cone_from", {"cone", "from", "cone.json"}, ""},
      {"20_cone_roundtrip", {"cone", "roundtrip", "oz42.json", "--seed", "2"}, ""},
  };
}

std::string run_invocation(const Invocation& inv) {
  std::vector<std::string> args{"ozkit"};
  args.insert(args.end(), inv.args.begin(), inv.args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  std::ostringstream rec;
  rec << "exit " << code << "\n--- stdout\n" << out.str();
  if (!inv.output.empty()) {
    rec << "--- " << inv.output << "\n";
    std::ifstream f(inv.output, std::ios::binary);
    if (f) {
      rec << f.rdbuf();
    } else {
      rec << "(absent)\n";
    }
  }
  return rec.str();
}

Outcome ac9(const fs::path& golden_dir) {
  const bool regen = std::getenv("OZKIT_REGEN_GOLDEN") != nullptr;
  const fs::path work = fs::temp_directory_path() / ("ozkit_golden_" + std::to_string(::getpid()));
  const fs::path home = fs::current_path();
  fs::remove_all(work);
  fs::create_directories(work);

  int matched = 0;
  int deterministic = 0;
  std::string first_mismatch;
  const auto suite = golden_suite();
  // Two full passes in fresh directories: byte equality with the golden file
  // and between the passes.
  std::vector<std::string> first_pass;
  for (int pass = 0; pass < 2; ++pass) {
    const fs::path dir = work / std::to_string(pass);
    fs::create_directories(dir);
    fs::current_path(dir);
    for (size_t i = 0; i < suite.size(); ++i) {
      const std::string rec = run_invocation(suite[i]);
      if (pass == 0) {
        first_pass.push_back(rec);
        continue;
      }
      deterministic += rec == first_pass[i];
      const fs::path gold = golden_dir / (suite[i].name + ".txt");
      if (regen) {
        std::ofstream(gold, std::ios::binary) << rec;
        ++matched;
        continue;
      }
      std::ifstream in(gold, std::ios::binary);
      std::stringstream ss;
      if (in) ss << in.rdbuf();
      if (in && ss.str() == rec) {
        ++matched;
      } else if (first_mismatch.empty()) {
        first_mismatch = suite[i].name;
      }
    }
    fs::current_path(home);
  }
  fs::remove_all(work);
  const int n = static_cast<int>(suite.size());
  std::string detail = fmt("%d/%d golden matches, %d/%d repeat-identical", matched, n,
                           deterministic, n);
  if (regen) detail += " (regenerated)";
  if (!first_mismatch.empty()) detail += ", first mismatch " + first_mismatch;
  return {matched == n && deterministic == n, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: ozkit_acceptance GOLDEN_DIR\n";
    return 2;
  }
  const fs::path golden = fs::absolute(argv[1]);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"structure theorem round trip", ac1},
      {"detector soundness and completeness", ac2},
      {"Schwarz inequality", ac3},
      {"cone bijection", ac4},
      {"tensor corollary", ac5},
      {"trace corollary", ac6},
      {"Cuntz corollary", ac7},
      {"rank vs witness oracle", ac8},
      {"CLI determinism", [&] { return ac9(golden); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
