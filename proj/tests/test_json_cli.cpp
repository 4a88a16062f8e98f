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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "helpers.hpp"
#include "ozkit/cli.hpp"
#include "ozkit/errors.hpp"
#include "ozkit/json_io.hpp"

using namespace ozkit;
using json::Json;
using testutil::diag;
using testutil::single;

namespace fs = std::filesystem;

namespace {

const FdAlgebra kM2({2});

struct Run {
  int code;
  std::string out;
  std::string err;
  Json report() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ozkit");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("ozkit_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }
  std::string write(const std::string& name, const Json& j) const {
    return write(name, json::dump(j));
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CpMap compression() {
  const Matrix v = diag({1.0, 0.5});
  return map_from_rule(kM2, kM2, [&](const Element& e) { return single(v * e.block(0) * v); });
}

CpMap diag_map() {
  const FdAlgebra dom({1, 1});
  const FdAlgebra cod({3});
  return map_from_rule(dom, cod, [&](const Element& e) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 0.3 * e.block(0)(0, 0);
    m(1, 1) = 0.7 * e.block(1)(0, 0);
    return Element(cod, {m});
  });
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("map round trip") {
  const CpMap phi = compression();
  const Json j = json::to_json(phi);
  CHECK(map_distance(json::map_from_json(j), phi) == 0.0);
  CHECK(json::dump(json::to_json(json::map_from_json(j))) == json::dump(j));
}

TEST_CASE("bare numbers are accepted as complex values") {
  const Json j = json::parse(R"({"blocks": [[[1, [0, 2]], [[0, -2], 3]]]})");
  const Element e = json::element_from_json(j);
  CHECK(e.block(0)(0, 1) == Complex(0, 2));
  CHECK(e.block(0)(1, 1) == Complex(3, 0));
}

TEST_CASE("schema errors") {
  auto kind = [](const std::string& text) {
    try {
      json::map_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("{") == ErrorKind::Schema);
  CHECK(kind("[]") == ErrorKind::Schema);
  CHECK(kind(R"({"domain": {"blocks": [1]}, "codomain": {"blocks": [1]}, "images": []})") !=
        ErrorKind::InvalidArgument);
}

TEST_CASE("decomposition and cone round trips") {
  const auto d = decompose(diag_map());
  const auto r = verify_decomposition(diag_map(), d);
  const auto back = json::decomposition_from_json(json::to_json(d, r));
  CHECK(distance(back.h, d.h) == 0.0);
  CHECK(map_distance(back.pi, d.pi) == 0.0);
  const auto rep = to_cone_hom(diag_map());
  const auto rep2 = json::cone_from_json(json::to_json(rep));
  CHECK(map_distance(from_cone_hom(rep2), diag_map()) < 1e-15);
  const GenSpec spec{FdAlgebra({1, 2}), FdAlgebra({3}), {{1, 1}}, 7, false};
  const GenSpec spec2 = json::gen_spec_from_json(json::to_json(spec));
  CHECK(spec2.multiplicities == spec.multiplicities);
  CHECK(spec2.seed == 7);
  CHECK_FALSE(spec2.strict_h);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("check-cp exit codes") {
  TempDir dir;
  CHECK(invoke({"check-cp", dir.write("id.json", json::to_json(identity_map(kM2)))}).code == 0);
  const Run t = invoke({"check-cp", dir.write("t.json", json::to_json(transpose_map(kM2)))});
  CHECK(t.code == 1);
  CHECK(t.report()["verdict"] == "fail");
  CHECK(t.report()["residuals"]["min_choi_eigenvalue"].get<double>() == doctest::Approx(-1.0));
  const std::string full = json::dump(json::to_json(identity_map(kM2)));
  const Run trunc = invoke({"check-cp", dir.write("trunc.json", full.substr(0, full.size() / 2))});
  CHECK(trunc.code == 2);
  CHECK(trunc.report()["verdict"] == "error");
  CHECK(invoke({"check-cp", dir.file("missing.json")}).code == 2);
  CHECK(invoke({"check-cp"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("check-oz") {
  TempDir dir;
  const std::string gen = dir.file("gen.json");
  REQUIRE(invoke({"gen", "--kind", "oz", "--seed", "42", "-o", gen}).code == 0);
  CHECK(invoke({"check-oz", gen}).code == 0);

  const Run bad = invoke({"check-oz", dir.write("c.json", json::to_json(compression())), "--witness"});
  CHECK(bad.code == 1);
  const Json rep = bad.report();
  CHECK(rep["reason"] == "NotOrderZero");
  REQUIRE(rep.contains("witness"));
  const Element a = json::element_from_json(rep["witness"]["a"]);
  const Element b = json::element_from_json(rep["witness"]["b"]);
  CHECK(are_orthogonal(a, b));
  CHECK(operator_norm(apply(compression(), a) * apply(compression(), b)) > 1e-8);

  const Run ncp = invoke({"check-oz", dir.write("t.json", json::to_json(transpose_map(kM2)))});
  CHECK(ncp.code == 1);
  CHECK(ncp.report()["reason"] == "NotCompletelyPositive");
}

TEST_CASE("decompose writes a reconstructible decomposition") {
  TempDir dir;
  const std::string in = dir.write("phi.json", json::to_json(diag_map()));
  const std::string out = dir.file("dec.json");
  REQUIRE(invoke({"decompose", in, "-o", out}).code == 0);
  const auto d = json::decomposition_from_json(json::parse(slurp(out)));
  const CpMap rebuilt = map_from_rule(d.pi.domain(), d.pi.codomain(),
                                      [&](const Element& e) { return d.h * apply(d.pi, e); });
  CHECK(map_distance(rebuilt, diag_map()) <= 1e-8);

  const std::string half_in = dir.write("half.json", json::to_json(scale(identity_map(kM2), 0.5)));
  const Run half = invoke({"decompose", half_in});
  CHECK(half.code == 0);
  CHECK(distance(json::element_from_json(half.report()["h"]), 0.5 * Element::unit(kM2)) < 1e-15);

  const std::string failed = dir.file("never.json");
  const Run r = invoke({"decompose", dir.write("c.json", json::to_json(compression())), "-o", failed});
  CHECK(r.code == 1);
  CHECK_FALSE(fs::exists(failed));
  CHECK_FALSE(fs::exists(failed + ".tmp"));
}

TEST_CASE("misc subcommands") {
  TempDir dir;
  const std::string half = dir.write("half.json", json::to_json(scale(identity_map(kM2), 0.5)));
  const Run f = invoke({"fcalc", half, "--poly", "0,1"});
  REQUIRE(f.code == 0);
  CHECK(map_distance(json::map_from_json(f.report()), scale(identity_map(kM2), 0.25)) < 1e-15);

  const std::string dm = dir.write("diag.json", json::to_json(diag_map()));
  const Run m = invoke({"cuntz-map", dm});
  REQUIRE(m.code == 0);
  CHECK(m.report()["T"] == Json::parse("[[1, 1]]"));

  const Run t = invoke({"tensor", half, half});
  REQUIRE(t.code == 0);
  CHECK(map_distance(json::map_from_json(t.report()), scale(identity_map(FdAlgebra({4})), 0.25)) <
        1e-15);
  const Run amp = invoke({"amplify", half, "-k", "3"});
  REQUIRE(amp.code == 0);
  CHECK(map_distance(json::map_from_json(amp.report()), scale(identity_map(FdAlgebra({6})), 0.5)) <
        1e-15);

  const Run tr = invoke({"trace-compose", dm, "--weights", "1"});
  CHECK(tr.code == 0);
  CHECK(tr.report()["trace"]["weights"][1].get<double>() == doctest::Approx(0.7));

  const Run rt = invoke({"cone", "roundtrip", dm});
  CHECK(rt.code == 0);
  const std::string cone = dir.file("cone.json");
  REQUIRE(invoke({"cone", "to", dm, "-o", cone}).code == 0);
  const Run from = invoke({"cone", "from", cone});
  REQUIRE(from.code == 0);
  CHECK(map_distance(json::map_from_json(from.report()), diag_map()) < 1e-15);

  const std::string el = dir.write("a.json", json::to_json(single(diag({1, 0.5, 0}))));
  const Run c = invoke({"cuntz", el});
  REQUIRE(c.code == 0);
  CHECK(c.report()["class"]["ranks"] == Json::parse("[2]"));

  CHECK(invoke({"fcalc", half, "--poly", "x"}).code == 2);
  CHECK(invoke({"amplify", half, "-k", "0"}).code == 2);
  CHECK(invoke({"gen", "--kind", "oz", "--domain", "2", "--codomain", "3", "--mult", "2"}).code == 2);
  CHECK(invoke({"gen", "--kind", "nope"}).code == 2);
}

TEST_CASE("gen variants") {
  const Run hom = invoke({"gen", "--kind", "hom", "--domain", "1,1", "--codomain", "3", "--mult",
                       "1,2", "--seed", "3"});
  REQUIRE(hom.code == 0);
  const CpMap pi = json::map_from_json(hom.report());
  CHECK(is_order_zero(pi).order_zero);
  const Run cp = invoke({"gen", "--kind", "cp", "--domain", "2", "--kraus", "2", "--seed", "3"});
  REQUIRE(cp.code == 0);
  CHECK_FALSE(is_order_zero(json::map_from_json(cp.report())).order_zero);
}

TEST_CASE("determinism and timing") {
  TempDir dir;
  const std::string c = dir.write("c.json", json::to_json(compression()));
  const Run a = invoke({"check-oz", c, "--witness", "--seed", "5"});
  const Run b = invoke({"check-oz", c, "--witness", "--seed", "5"});
  CHECK(a.out == b.out);
  CHECK_FALSE(a.report().contains("timing_ms"));
  CHECK(invoke({"check-oz", c, "--timing"}).report().contains("timing_ms"));
}

TEST_CASE("tolerance from the environment") {
  TempDir dir;
  const std::string t = dir.write("t.json", json::to_json(transpose_map(kM2)));
  ::setenv("OZKIT_TOL", "2", 1);
  const int loose = invoke({"check-cp", t}).code;
  ::unsetenv("OZKIT_TOL");
  CHECK(loose == 0);
  CHECK(invoke({"check-cp", t}).code == 1);
  CHECK(invoke({"check-cp", t, "--tol", "2"}).code == 0);
}

}  // TEST_SUITE
