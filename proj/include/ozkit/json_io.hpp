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

// JSON schemas. All objects keep the field order shown here when written.
//
//   complex        [re, im]
//   matrix         row-major nested arrays of complex
//   algebra        {"blocks": [n_1, ...]}
//   element        {"blocks": [matrix, ...]}
//   map            {"domain": algebra, "codomain": algebra,
//                   "images": [block i -> n_i x n_i array of elements]}
//   decomposition  {"h": element, "s": element, "pi": images, "residuals": {...}}
//   cone rep       {"levels": [{"t": real, "p": element}, ...], "pi": images}
//   cuntz class    {"k": int, "ranks": [int, ...]}
//   morphism       {"T": [[int, ...], ...]}
//   trace          {"weights": [real, ...]}
//   gen spec       {"domain", "codomain", "multiplicities", "seed", "strict_h"}
//
// Readers accept a bare number wherever a complex is expected. Malformed
// input raises Error(ErrorKind::Schema).

#pragma once

#include <string>

#include "json.hpp"
#include "ozkit/algebra.hpp"
#include "ozkit/cone.hpp"
#include "ozkit/cp_map.hpp"
#include "ozkit/cuntz.hpp"
#include "ozkit/generators.hpp"
#include "ozkit/order_zero.hpp"
#include "ozkit/traces.hpp"

namespace ozkit::json {

using Json = nlohmann::ordered_json;

Json to_json(const FdAlgebra& a);
Json to_json(const Element& e);
Json to_json(const CpMap& phi);
Json images_to_json(const CpMap& phi);
Json to_json(const OrderZeroDecomposition& d, const DecompositionReport& report);
Json to_json(const DecompositionReport& report);
Json to_json(const ConeHomRep& rep);
Json to_json(const CuntzClass& c);
Json to_json(const CuntzMorphism& m);
Json to_json(const TracialFunctional& t);
Json to_json(const LinearFunctional& l);
Json to_json(const GenSpec& spec);
Json to_json(const OrderZeroWitness& w);

Matrix matrix_from_json(const Json& j);
FdAlgebra algebra_from_json(const Json& j);
// Algebra inferred from the block shapes.
Element element_from_json(const Json& j);
Element element_from_json(const Json& j, const FdAlgebra& algebra);
CpMap map_from_json(const Json& j);
// Images table with algebras inferred from the shapes.
CpMap images_from_json(const Json& j);
OrderZeroDecomposition decomposition_from_json(const Json& j);
ConeHomRep cone_from_json(const Json& j);
CuntzClass cuntz_class_from_json(const Json& j, const FdAlgebra& base);
CuntzMorphism morphism_from_json(const Json& j);
TracialFunctional trace_from_json(const Json& j, const FdAlgebra& algebra);
GenSpec gen_spec_from_json(const Json& j);

// Parses text; throws Error(Schema) on a syntax error.
Json parse(const std::string& text);
// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace ozkit::json
