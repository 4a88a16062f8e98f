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

#include "ozkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "linalg.hpp"
#include "ozkit/json_io.hpp"

namespace ozkit::cli {

namespace {

using json::Json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write to a sibling temp file, then rename over the target, so a failed
// run never leaves a partial artifact behind.
void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw IoError("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename onto '" + path + "'");
  }
}

template <typename T>
std::vector<T> parse_list(const std::string& text, char sep = ',') {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !(is >> std::ws).eof()) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse list entry '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty list '" + text + "'");
  return out;
}

std::vector<std::vector<int>> parse_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_list<int>(row));
  return rows;
}

double default_tolerance() {
  if (const char* env = std::getenv("OZKIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0.0) return v;
  }
  return 1e-8;
}

Json residual_json(const DecompositionReport& r) {
  Json j = Json::object();
  j["reconstruction"] = r.reconstruction;
  j["multiplicativity"] = r.multiplicativity;
  j["commutator"] = r.commutator;
  j["norm_gap"] = r.norm_gap;
  j["support"] = r.support;
  return j;
}

// Smallest Choi eigenvalue (≤ 0) and Choi non-hermiticity.
Json choi_residuals(const CpMap& phi) {
  double min_eig = 0.0;
  double herm = 0.0;
  for (const auto& c : choi_blocks(phi)) {
    if (c.size() == 0) continue;
    min_eig = std::min(min_eig, detail::hermitian_eigenvalues(c).minCoeff());
    herm = std::max(herm, detail::spectral_norm(c - c.adjoint()));
  }
  Json j = Json::object();
  j["min_choi_eigenvalue"] = min_eig;
  j["choi_hermiticity"] = herm;
  return j;
}

Json report(const std::string& command, const char* verdict) {
  Json j = Json::object();
  j["command"] = command;
  j["verdict"] = verdict;
  return j;
}

// What a subcommand produced: a report (gets timing/exit semantics) or a
// raw artifact destined for stdout.
struct Outcome {
  Json doc;
  int code = kOk;
  bool is_report = true;
};

struct Options {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool timing = false;
  std::string output;

  Tolerance tolerance() const { return Tolerance::uniform(tol); }
};

// Sends an artifact either to -o (with a report on stdout) or, without -o,
// straight to stdout.
Outcome emit_artifact(const Json& artifact, const Options& opt, Json rep) {
  if (opt.output.empty()) return Outcome{artifact, kOk, false};
  write_file(opt.output, json::dump(artifact));
  rep["output"] = opt.output;
  return Outcome{std::move(rep), kOk, true};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ozkit: completely positive order zero maps between finite-dimensional C*-algebras"};
  app.require_subcommand(1);

  Options opt;
  opt.tol = default_tolerance();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "equality / positivity tolerance (env OZKIT_TOL)");
    sub->add_flag("--timing", opt.timing, "add wall-clock timing to the report");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", opt.output, "artifact path (stdout when omitted)");
  };

  std::string file;
  std::string file2;
  std::function<Outcome()> handler;
  std::string command;

  // check-cp
  {
    auto* sub = app.add_subcommand("check-cp", "decide complete positivity via Choi matrices");
    sub->add_option("file", file, "map JSON")->required();
    add_common(sub);
    sub->callback([&] {
      command = "check-cp";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const bool cp = is_completely_positive(phi, opt.tolerance());
        Json rep = report(command, cp ? "pass" : "fail");
        if (!cp) rep["reason"] = "NotCompletelyPositive";
        rep["residuals"] = choi_residuals(phi);
        return Outcome{rep, cp ? kOk : kFailure};
      };
    });
  }

  // check-oz
  bool with_witness = false;
  {
    auto* sub = app.add_subcommand("check-oz", "decide the order zero property");
    sub->add_option("file", file, "map JSON")->required();
    sub->add_flag("--witness", with_witness, "include a violating orthogonal pair");
    sub->add_option("--seed", opt.seed, "witness search seed");
    add_common(sub);
    sub->callback([&] {
      command = "check-oz";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const Tolerance tol = opt.tolerance();
        if (!is_completely_positive(phi, tol)) {
          Json rep = report(command, "fail");
          rep["reason"] = "NotCompletelyPositive";
          rep["residuals"] = choi_residuals(phi);
          return Outcome{rep, kFailure};
        }
        const OrderZeroDecomposition cand = structure_candidate(phi, tol);
        const DecompositionReport r = verify_decomposition(phi, cand, tol);
        Json rep = report(command, r.passed() ? "pass" : "fail");
        if (!r.passed()) rep["reason"] = "NotOrderZero";
        rep["residuals"] = residual_json(r);
        if (!r.passed() && with_witness) {
          if (auto w = find_witness(phi, tol, opt.seed)) {
            rep["witness"] = json::to_json(*w);
          } else {
            rep["witness"] = nullptr;
          }
        }
        return Outcome{rep, r.passed() ? kOk : kFailure};
      };
    });
  }

  // decompose
  {
    auto* sub = app.add_subcommand("decompose", "compute h, pi and s with residuals");
    sub->add_option("file", file, "map JSON")->required();
    sub->add_option("--seed", opt.seed, "witness search seed");
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "decompose";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const Tolerance tol = opt.tolerance();
        const OrderZeroDecomposition d = structure_candidate(phi, tol);
        const DecompositionReport r = verify_decomposition(phi, d, tol);
        if (!r.passed()) {
          Json rep = report(command, "fail");
          rep["reason"] = "NotOrderZero";
          rep["residuals"] = residual_json(r);
          if (auto w = find_witness(phi, tol, opt.seed)) rep["witness"] = json::to_json(*w);
          return Outcome{rep, kFailure};
        }
        Json rep = report(command, "pass");
        rep["residuals"] = residual_json(r);
        return emit_artifact(json::to_json(d, r), opt, rep);
      };
    });
  }

  // fcalc
  std::string poly;
  {
    auto* sub = app.add_subcommand("fcalc", "positive functional calculus f(phi)");
    sub->add_option("file", file, "map JSON")->required();
    sub->add_option("--poly", poly, "c1,c2,... for f(t) = c1 t + c2 t^2 + ...")->required();
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "fcalc";
      handler = [&] {
        Polynomial f;
        f.coefficients.push_back(0.0);
        for (double c : parse_list<double>(poly)) f.coefficients.push_back(c);
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const CpMap g = functional_calculus(phi, f, opt.tolerance());
        return emit_artifact(json::to_json(g), opt, report(command, "pass"));
      };
    });
  }

  // tensor
  {
    auto* sub = app.add_subcommand("tensor", "tensor product of two maps");
    sub->add_option("f", file, "first map JSON")->required();
    sub->add_option("g", file2, "second map JSON")->required();
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "tensor";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const CpMap psi = json::map_from_json(json::parse(read_file(file2)));
        return emit_artifact(json::to_json(tensor(phi, psi)), opt,
                             report(command, "pass"));
      };
    });
  }

  // amplify
  int level = 1;
  {
    auto* sub = app.add_subcommand("amplify", "matrix amplification id_k (x) phi");
    sub->add_option("file", file, "map JSON")->required();
    sub->add_option("-k", level, "amplification level")->required();
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "amplify";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        return emit_artifact(json::to_json(amplify(phi, level)), opt,
                             report(command, "pass"));
      };
    });
  }

  // cuntz
  {
    auto* sub = app.add_subcommand("cuntz", "Cuntz class (rank vector) of a positive element");
    sub->add_option("file", file, "element JSON in M_k(A)")->required();
    sub->add_option("-k", level, "amplification level of the element");
    sub->add_option("--compare", file2, "second element; report subequivalence");
    add_common(sub);
    sub->callback([&] {
      command = "cuntz";
      handler = [&] {
        const Tolerance tol = opt.tolerance();
        const Element a = json::element_from_json(json::parse(read_file(file)));
        const CuntzClass c = cuntz_class(a, level, tol);
        Json rep = report(command, "pass");
        rep["class"] = json::to_json(c);
        if (!file2.empty()) {
          const Element b = json::element_from_json(json::parse(read_file(file2)));
          const CuntzClass cb = cuntz_class(b, level, tol);
          rep["compare"] = json::to_json(cb);
          rep["subequivalent"] = subequivalent(c, cb);
        }
        return Outcome{rep, kOk};
      };
    });
  }

  // cuntz-map
  {
    auto* sub = app.add_subcommand("cuntz-map", "induced morphism W(phi) on rank vectors");
    sub->add_option("file", file, "map JSON")->required();
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "cuntz-map";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const CuntzMorphism m = induced_morphism(phi, opt.tolerance());
        return emit_artifact(json::to_json(m), opt, report(command, "pass"));
      };
    });
  }

  // trace-compose
  std::string weights;
  {
    auto* sub = app.add_subcommand("trace-compose", "compose a trace on the codomain with phi");
    sub->add_option("file", file, "map JSON")->required();
    sub->add_option("--weights", weights, "w1,w2,... one per codomain block")->required();
    add_common(sub);
    sub->callback([&] {
      command = "trace-compose";
      handler = [&] {
        const CpMap phi = json::map_from_json(json::parse(read_file(file)));
        const TracialFunctional tau(phi.codomain(), parse_list<double>(weights));
        const LinearFunctional l = compose_with_map(tau, phi);
        const auto tracial = is_tracial(l, opt.tolerance());
        Json rep = report(command, tracial ? "pass" : "fail");
        rep["functional"] = json::to_json(l);
        rep["tracial"] = tracial.has_value();
        if (tracial) rep["trace"] = json::to_json(*tracial);
        return Outcome{rep, tracial ? kOk : kFailure};
      };
    });
  }

  // cone
  std::string action;
  {
    auto* sub = app.add_subcommand("cone", "cone correspondence: to | from | roundtrip");
    sub->add_option("action", action, "to, from or roundtrip")
        ->required()
        ->check(CLI::IsMember({"to", "from", "roundtrip"}));
    sub->add_option("file", file, "map JSON (to, roundtrip) or cone JSON (from)")->required();
    sub->add_option("--seed", opt.seed, "seed for the homomorphism check");
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "cone";
      handler = [&] {
        const Tolerance tol = opt.tolerance();
        const Json input = json::parse(read_file(file));
        if (action == "from") {
          const ConeHomRep rep = json::cone_from_json(input);
          return emit_artifact(json::to_json(from_cone_hom(rep, tol)), opt,
                               report(command, "pass"));
        }
        const CpMap phi = json::map_from_json(input);
        const ConeHomRep rep = to_cone_hom(phi, tol);
        if (action == "to") {
          return emit_artifact(json::to_json(rep), opt, report(command, "pass"));
        }
        const double gap = map_distance(from_cone_hom(rep, tol), phi);
        const HomReport hom = verify_hom(rep, tol, opt.seed);
        const bool ok = gap <= tol.eps_eq && hom.passed;
        Json r = report(command, ok ? "pass" : "fail");
        r["residuals"] = {{"roundtrip", gap}, {"hom_defect", hom.max_defect}};
        r["levels"] = static_cast<int>(rep.levels.size());
        if (!opt.output.empty()) {
          write_file(opt.output, json::dump(json::to_json(rep)));
          r["output"] = opt.output;
        }
        return Outcome{r, ok ? kOk : kFailure};
      };
    });
  }

  // gen
  std::string kind;
  std::string domain = "2";
  std::string codomain;
  std::string mult;
  std::string spec_file;
  int kraus_count = 2;
  int max_size = 9;
  bool loose = false;
  {
    auto* sub = app.add_subcommand("gen", "seeded instance generator");
    sub->add_option("--kind", kind, "hom, oz or cp")
        ->required()
        ->check(CLI::IsMember({"hom", "oz", "cp"}));
    sub->add_option("--domain", domain, "domain blocks, e.g. 1,1");
    sub->add_option("--codomain", codomain, "codomain blocks, e.g. 3");
    sub->add_option("--mult", mult, "multiplicities, rows per codomain block: 1,1;0,2");
    sub->add_option("--spec", spec_file, "GenSpec JSON (overrides the algebra flags)");
    sub->add_option("--seed", opt.seed, "generator seed");
    sub->add_option("--kraus", kraus_count, "Kraus operators per block (cp)");
    sub->add_option("--max-size", max_size, "codomain budget for random embeddings");
    sub->add_flag("--loose", loose, "allow h to vanish on part of pi(1)");
    add_common(sub);
    add_output(sub);
    sub->callback([&] {
      command = "gen";
      handler = [&] {
        CpMap phi = identity_map(FdAlgebra({1}));
        if (kind == "cp") {
          const FdAlgebra dom(parse_list<int>(domain));
          const FdAlgebra cod = codomain.empty() ? dom : FdAlgebra(parse_list<int>(codomain));
          phi = random_cp_map(dom, cod, kraus_count, opt.seed);
        } else {
          GenSpec spec{FdAlgebra({1}), FdAlgebra({1}), {{1}}, opt.seed, !loose};
          if (!spec_file.empty()) {
            spec = json::gen_spec_from_json(json::parse(read_file(spec_file)));
          } else if (!mult.empty()) {
            if (codomain.empty()) {
              throw Error(ErrorKind::InvalidArgument, "--mult needs --codomain");
            }
            spec = GenSpec{FdAlgebra(parse_list<int>(domain)), FdAlgebra(parse_list<int>(codomain)),
                           parse_matrix(mult), opt.seed, !loose};
          } else {
            if (!codomain.empty()) {
              throw Error(ErrorKind::InvalidArgument, "--codomain needs --mult");
            }
            spec = random_gen_spec(FdAlgebra(parse_list<int>(domain)), max_size, opt.seed, !loose);
          }
          phi = kind == "hom" ? random_hom(spec) : random_order_zero(spec);
        }
        return emit_artifact(json::to_json(phi), opt, report(command, "pass"));
      };
    });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](Outcome o) {
    if (o.is_report && opt.timing) {
      o.doc["timing_ms"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
    out << json::dump(o.doc);
    return o.code;
  };
  auto failure = [&](const char* verdict, const std::string& reason, const std::string& msg,
                     int code) {
    Json rep = report(command, verdict);
    rep["reason"] = reason;
    rep["message"] = msg;
    if (code == kUsage) err << "ozkit " << command << ": " << msg << "\n";
    return finish(Outcome{std::move(rep), code, true});
  };

  try {
    return finish(handler());
  } catch (const NotOrderZeroError& e) {
    return failure("fail", "NotOrderZero", e.what(), kFailure);
  } catch (const Error& e) {
    const bool usage = e.is_usage_error();
    return failure(usage ? "error" : "fail", std::string(error_kind_name(e.kind())), e.what(),
                   usage ? kUsage : kFailure);
  } catch (const IoError& e) {
    return failure("error", "IO", e.what(), kUsage);
  }
}

}  // namespace ozkit::cli
