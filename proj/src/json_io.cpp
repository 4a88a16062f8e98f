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

#include "ozkit/json_io.hpp"

#include <string>

namespace ozkit::json {

namespace {

[[noreturn]] void schema(const std::string& why) { throw Error(ErrorKind::Schema, why); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) schema(std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) schema(std::string("missing field '") + name + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  return j;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_real(const Json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema("complex scalar must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json residuals_json(const DecompositionReport& r) {
  Json j = Json::object();
  j["reconstruction"] = r.reconstruction;
  j["multiplicativity"] = r.multiplicativity;
  j["commutator"] = r.commutator;
  j["norm_gap"] = r.norm_gap;
  j["support"] = r.support;
  return j;
}

}  // namespace

Json to_json(const FdAlgebra& a) {
  Json j = Json::object();
  j["blocks"] = a.block_dims();
  return j;
}

Json to_json(const Element& e) {
  Json blocks = Json::array();
  for (const auto& b : e.blocks()) blocks.push_back(matrix_to_json(b));
  Json j = Json::object();
  j["blocks"] = std::move(blocks);
  return j;
}

Json images_to_json(const CpMap& phi) {
  Json images = Json::array();
  for (int i = 0; i < phi.domain().num_blocks(); ++i) {
    const int n = phi.domain().block_dim(i);
    Json rows = Json::array();
    for (int p = 0; p < n; ++p) {
      Json row = Json::array();
      for (int q = 0; q < n; ++q) row.push_back(to_json(phi.image(i, p, q)));
      rows.push_back(std::move(row));
    }
    images.push_back(std::move(rows));
  }
  return images;
}

Json to_json(const CpMap& phi) {
  Json j = Json::object();
  j["domain"] = to_json(phi.domain());
  j["codomain"] = to_json(phi.codomain());
  j["images"] = images_to_json(phi);
  return j;
}

Json to_json(const DecompositionReport& report) {
  Json j = residuals_json(report);
  j["h_positive"] = report.h_positive;
  j["passed"] = report.passed();
  return j;
}

Json to_json(const OrderZeroDecomposition& d, const DecompositionReport& report) {
  Json j = Json::object();
  j["h"] = to_json(d.h);
  j["s"] = to_json(d.s);
  j["pi"] = images_to_json(d.pi);
  j["residuals"] = residuals_json(report);
  return j;
}

Json to_json(const ConeHomRep& rep) {
  Json levels = Json::array();
  for (const auto& lv : rep.levels) {
    Json l = Json::object();
    l["t"] = lv.t;
    l["p"] = to_json(lv.p);
    levels.push_back(std::move(l));
  }
  Json j = Json::object();
  j["levels"] = std::move(levels);
  j["pi"] = images_to_json(rep.pi);
  return j;
}

Json to_json(const CuntzClass& c) {
  Json j = Json::object();
  j["k"] = c.k;
  j["ranks"] = c.ranks;
  return j;
}

Json to_json(const CuntzMorphism& m) {
  Json j = Json::object();
  j["T"] = m.T;
  return j;
}

Json to_json(const TracialFunctional& t) {
  Json j = Json::object();
  j["weights"] = t.weights();
  return j;
}

Json to_json(const LinearFunctional& l) {
  Json blocks = Json::array();
  for (const auto& c : l.coefficients) blocks.push_back(matrix_to_json(c));
  Json j = Json::object();
  j["coefficients"] = std::move(blocks);
  return j;
}

Json to_json(const GenSpec& spec) {
  Json j = Json::object();
  j["domain"] = to_json(spec.domain);
  j["codomain"] = to_json(spec.codomain);
  j["multiplicities"] = spec.multiplicities;
  j["seed"] = spec.seed;
  j["strict_h"] = spec.strict_h;
  return j;
}

Json to_json(const OrderZeroWitness& w) {
  Json j = Json::object();
  j["a"] = to_json(w.a);
  j["b"] = to_json(w.b);
  j["violation"] = w.violation;
  return j;
}

Matrix matrix_from_json(const Json& j) {
  array(j, "matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Matrix m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = array(j[static_cast<size_t>(r)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != rows) schema("matrix must be square");
    for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
  }
  return m;
}

FdAlgebra algebra_from_json(const Json& j) {
  const Json& blocks = array(field(j, "blocks"), "algebra blocks");
  std::vector<int> dims;
  for (const auto& b : blocks) dims.push_back(as_int(b, "block dimension"));
  return FdAlgebra(std::move(dims));
}

Element element_from_json(const Json& j) {
  const Json& blocks = array(field(j, "blocks"), "element blocks");
  std::vector<Matrix> mats;
  std::vector<int> dims;
  for (const auto& b : blocks) {
    mats.push_back(matrix_from_json(b));
    dims.push_back(static_cast<int>(mats.back().rows()));
  }
  try {
    return Element(FdAlgebra(std::move(dims)), std::move(mats));
  } catch (const Error& e) {
    schema(std::string("invalid element: ") + e.what());
  }
}

Element element_from_json(const Json& j, const FdAlgebra& algebra) {
  Element e = element_from_json(j);
  if (!(e.algebra() == algebra)) schema("element does not match the expected algebra");
  return e;
}

namespace {

std::vector<std::vector<Element>> images_table(const Json& j, const FdAlgebra& domain,
                                               const FdAlgebra* codomain) {
  array(j, "images");
  if (static_cast<int>(j.size()) != domain.num_blocks()) {
    schema("images need one entry per domain block");
  }
  std::vector<std::vector<Element>> images;
  for (int i = 0; i < domain.num_blocks(); ++i) {
    const int n = domain.block_dim(i);
    const Json& rows = array(j[static_cast<size_t>(i)], "image block");
    if (static_cast<int>(rows.size()) != n) schema("image block has the wrong size");
    std::vector<Element> row;
    for (int p = 0; p < n; ++p) {
      const Json& r = array(rows[static_cast<size_t>(p)], "image row");
      if (static_cast<int>(r.size()) != n) schema("image row has the wrong size");
      for (int q = 0; q < n; ++q) {
        row.push_back(codomain ? element_from_json(r[static_cast<size_t>(q)], *codomain)
                               : element_from_json(r[static_cast<size_t>(q)]));
      }
    }
    images.push_back(std::move(row));
  }
  return images;
}

FdAlgebra domain_from_images(const Json& j) {
  array(j, "images");
  std::vector<int> dims;
  for (const auto& block : j) dims.push_back(static_cast<int>(array(block, "image block").size()));
  try {
    return FdAlgebra(std::move(dims));
  } catch (const Error& e) {
    schema(std::string("invalid images: ") + e.what());
  }
}

}  // namespace

CpMap map_from_json(const Json& j) {
  try {
    const FdAlgebra dom = algebra_from_json(field(j, "domain"));
    const FdAlgebra cod = algebra_from_json(field(j, "codomain"));
    return CpMap(dom, cod, images_table(field(j, "images"), dom, &cod));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    schema(std::string("invalid map: ") + e.what());
  }
}

CpMap images_from_json(const Json& j) {
  const FdAlgebra dom = domain_from_images(j);
  auto table = images_table(j, dom, nullptr);
  if (table.empty() || table.front().empty()) schema("images table is empty");
  const FdAlgebra cod = table.front().front().algebra();
  try {
    return CpMap(dom, cod, std::move(table));
  } catch (const Error& e) {
    schema(std::string("invalid images: ") + e.what());
  }
}

OrderZeroDecomposition decomposition_from_json(const Json& j) {
  CpMap pi = images_from_json(field(j, "pi"));
  Element h = element_from_json(field(j, "h"), pi.codomain());
  Element s = element_from_json(field(j, "s"), pi.codomain());
  return OrderZeroDecomposition{std::move(h), std::move(pi), std::move(s)};
}

ConeHomRep cone_from_json(const Json& j) {
  CpMap pi = images_from_json(field(j, "pi"));
  ConeHomRep rep{pi.domain(), pi.codomain(), {}, pi};
  for (const auto& l : array(field(j, "levels"), "levels")) {
    rep.levels.push_back({as_real(field(l, "t"), "level t"),
                          element_from_json(field(l, "p"), pi.codomain())});
  }
  return rep;
}

CuntzClass cuntz_class_from_json(const Json& j, const FdAlgebra& base) {
  CuntzClass c{base, as_int(field(j, "k"), "k"), {}};
  for (const auto& r : array(field(j, "ranks"), "ranks")) c.ranks.push_back(as_int(r, "rank"));
  if (static_cast<int>(c.ranks.size()) != base.num_blocks()) schema("ranks need one entry per block");
  return c;
}

CuntzMorphism morphism_from_json(const Json& j) {
  CuntzMorphism m;
  for (const auto& row : array(field(j, "T"), "T")) {
    std::vector<int> r;
    for (const auto& v : array(row, "T row")) r.push_back(as_int(v, "T entry"));
    m.T.push_back(std::move(r));
  }
  return m;
}

TracialFunctional trace_from_json(const Json& j, const FdAlgebra& algebra) {
  std::vector<double> w;
  for (const auto& v : array(field(j, "weights"), "weights")) w.push_back(as_real(v, "weight"));
  try {
    return TracialFunctional(algebra, std::move(w));
  } catch (const Error& e) {
    schema(std::string("invalid trace: ") + e.what());
  }
}

GenSpec gen_spec_from_json(const Json& j) {
  GenSpec spec{algebra_from_json(field(j, "domain")), algebra_from_json(field(j, "codomain")), {},
               0, true};
  for (const auto& row : array(field(j, "multiplicities"), "multiplicities")) {
    std::vector<int> r;
    for (const auto& v : array(row, "multiplicity row")) r.push_back(as_int(v, "multiplicity"));
    spec.multiplicities.push_back(std::move(r));
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned() && !it->is_number_integer()) schema("seed must be an integer");
    spec.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("strict_h"); it != j.end()) {
    if (!it->is_boolean()) schema("strict_h must be a boolean");
    spec.strict_h = it->get<bool>();
  }
  return spec;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ozkit::json
