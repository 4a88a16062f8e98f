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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ozkit/cone.hpp"
#include "ozkit/cp_map.hpp"
#include "ozkit/cuntz.hpp"
#include "ozkit/errors.hpp"
#include "ozkit/generators.hpp"
#include "ozkit/json_io.hpp"
#include "ozkit/order_zero.hpp"
#include "ozkit/traces.hpp"

namespace py = pybind11;
using namespace ozkit;

namespace {

// Python sees maps as JSON strings on the wire for I/O and as CpMap objects
// otherwise.
CpMap map_from_string(const std::string& s) { return json::map_from_json(json::parse(s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Completely positive order zero maps between finite-dimensional C*-algebras";

  // OzkitError carries the error kind name in .kind.
  m.attr("OzkitError") = py::exception<Error>(m, "OzkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("ozkit._core").attr("OzkitError");
      py::object exc = type(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def(py::init([](double psd, double eq, double rank) {
             Tolerance t;
             t.eps_psd = psd;
             t.eps_eq = eq;
             t.eps_rank = rank;
             t.validate();
             return t;
           }),
           py::arg("eps_psd") = 1e-8, py::arg("eps_eq") = 1e-8, py::arg("eps_rank") = 1e-7)
      .def_readwrite("eps_psd", &Tolerance::eps_psd)
      .def_readwrite("eps_eq", &Tolerance::eps_eq)
      .def_readwrite("eps_rank", &Tolerance::eps_rank);

  py::class_<FdAlgebra>(m, "FdAlgebra")
      .def(py::init<std::vector<int>>(), py::arg("block_dims"))
      .def_property_readonly("block_dims", &FdAlgebra::block_dims)
      .def_property_readonly("total_size", &FdAlgebra::total_size)
      .def_property_readonly("linear_dimension", &FdAlgebra::linear_dimension)
      .def("__eq__", &FdAlgebra::operator==)
      .def("__repr__", [](const FdAlgebra& a) {
        std::string s = "FdAlgebra([";
        for (size_t i = 0; i < a.block_dims().size(); ++i) {
          s += (i ? ", " : "") + std::to_string(a.block_dims()[i]);
        }
        return s + "])";
      });

  py::class_<Element>(m, "Element")
      .def(py::init([](const FdAlgebra& alg, const std::vector<Matrix>& blocks) {
             return Element(alg, blocks);
           }),
           py::arg("algebra"), py::arg("blocks"))
      .def_static("zero", &Element::zero)
      .def_static("unit", &Element::unit)
      .def_static("matrix_unit", &Element::matrix_unit, py::arg("algebra"), py::arg("block"),
                  py::arg("p"), py::arg("q"))
      .def_property_readonly("algebra", &Element::algebra)
      .def_property_readonly("blocks", &Element::blocks)
      .def("embedded", &Element::embedded)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__mul__", [](const Element& a, Complex s) { return s * a; })
      .def("__rmul__", [](const Element& a, Complex s) { return s * a; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("adjoint", [](const Element& a) { return adjoint(a); })
      .def("norm", [](const Element& a) { return operator_norm(a); });

  m.def("is_positive", &is_positive, py::arg("a"), py::arg("tol") = Tolerance{});
  m.def("are_orthogonal", &are_orthogonal, py::arg("a"), py::arg("b"), py::arg("tol") = Tolerance{});
  m.def("support_projection", &support_projection, py::arg("a"), py::arg("tol") = Tolerance{});
  m.def("spectral_decomposition", [](const Element& a, const Tolerance& tol) {
    std::vector<std::pair<double, Element>> out;
    for (auto& c : spectral_decomposition(a, tol)) out.emplace_back(c.eigenvalue, c.projection);
    return out;
  }, py::arg("a"), py::arg("tol") = Tolerance{});

  py::class_<CpMap>(m, "CpMap")
      .def_property_readonly("domain", &CpMap::domain)
      .def_property_readonly("codomain", &CpMap::codomain)
      .def("image", &CpMap::image, py::arg("block"), py::arg("p"), py::arg("q"))
      .def("__call__", [](const CpMap& phi, const Element& a) { return apply(phi, a); })
      .def("to_json", [](const CpMap& phi) { return json::dump(json::to_json(phi)); })
      .def_static("from_json", &map_from_string);

  m.def("identity_map", &identity_map);
  m.def("zero_map", &zero_map);
  m.def("transpose_map", &transpose_map);
  m.def("scale", &scale);
  m.def("map_distance", &map_distance);
  m.def("choi_blocks", &choi_blocks);
  m.def("is_completely_positive", &is_completely_positive, py::arg("phi"),
        py::arg("tol") = Tolerance{});
  m.def("kraus", [](const CpMap& phi, const Tolerance& tol) { return kraus(phi, tol).operators; },
        py::arg("phi"), py::arg("tol") = Tolerance{});
  m.def("map_norm", &map_norm, py::arg("phi"), py::arg("tol") = Tolerance{});
  m.def("tensor", &tensor);
  m.def("amplify", &amplify);
  m.def("compose", &compose);

  py::class_<OrderZeroDecomposition>(m, "OrderZeroDecomposition")
      .def_readonly("h", &OrderZeroDecomposition::h)
      .def_readonly("pi", &OrderZeroDecomposition::pi)
      .def_readonly("s", &OrderZeroDecomposition::s);
  py::class_<OrderZeroWitness>(m, "OrderZeroWitness")
      .def_readonly("a", &OrderZeroWitness::a)
      .def_readonly("b", &OrderZeroWitness::b)
      .def_readonly("violation", &OrderZeroWitness::violation);
  py::class_<DecompositionReport>(m, "DecompositionReport")
      .def_readonly("reconstruction", &DecompositionReport::reconstruction)
      .def_readonly("multiplicativity", &DecompositionReport::multiplicativity)
      .def_readonly("commutator", &DecompositionReport::commutator)
      .def_readonly("norm_gap", &DecompositionReport::norm_gap)
      .def_readonly("support", &DecompositionReport::support)
      .def("passed", &DecompositionReport::passed)
      .def("max_residual", &DecompositionReport::max_residual);

  m.def("decompose", &decompose, py::arg("phi"), py::arg("tol") = Tolerance{},
        py::arg("seed") = 0);
  m.def("verify_decomposition", &verify_decomposition, py::arg("phi"), py::arg("d"),
        py::arg("tol") = Tolerance{});
  m.def("is_order_zero", [](const CpMap& phi, const Tolerance& tol, std::uint64_t seed) {
    const auto r = is_order_zero(phi, tol, seed);
    return py::make_tuple(r.order_zero, r.witness);
  }, py::arg("phi"), py::arg("tol") = Tolerance{}, py::arg("seed") = 0,
        "Returns (order_zero, witness or None).");
  m.def("functional_calculus", &functional_calculus, py::arg("phi"), py::arg("f"),
        py::arg("tol") = Tolerance{});

  py::class_<ConeHomRep>(m, "ConeHomRep")
      .def_property_readonly("levels", [](const ConeHomRep& r) {
        std::vector<std::pair<double, Element>> out;
        for (const auto& lv : r.levels) out.emplace_back(lv.t, lv.p);
        return out;
      })
      .def_readonly("pi", &ConeHomRep::pi);
  m.def("to_cone_hom", &to_cone_hom, py::arg("phi"), py::arg("tol") = Tolerance{});
  m.def("from_cone_hom", &from_cone_hom, py::arg("rep"), py::arg("tol") = Tolerance{});
  m.def("evaluate", [](const ConeHomRep& rep, std::vector<double> coefficients, const Element& a) {
    return evaluate(rep, Polynomial{std::move(coefficients)}, a);
  }, py::arg("rep"), py::arg("coefficients"), py::arg("a"),
        "coefficients[j] multiplies t^j; coefficients[0] must be 0.");
  m.def("verify_hom", [](const ConeHomRep& rep, const Tolerance& tol, std::uint64_t seed) {
    return verify_hom(rep, tol, seed).max_defect;
  }, py::arg("rep"), py::arg("tol") = Tolerance{}, py::arg("seed") = 0);

  m.def("cuntz_ranks", [](const Element& a, int k, const Tolerance& tol) {
    return cuntz_class(a, k, tol).ranks;
  }, py::arg("a"), py::arg("k") = 1, py::arg("tol") = Tolerance{});
  m.def("induced_morphism", [](const CpMap& phi, const Tolerance& tol) {
    return induced_morphism(phi, tol).T;
  }, py::arg("phi"), py::arg("tol") = Tolerance{});
  m.def("construct_witness", [](const Element& a, const Element& b, double delta,
                                const Tolerance& tol) {
    const auto w = construct_witness(a, b, delta, tol);
    return py::make_tuple(w.x, w.residual);
  }, py::arg("a"), py::arg("b"), py::arg("delta"), py::arg("tol") = Tolerance{});

  m.def("trace_compose", [](const std::vector<double>& weights, const CpMap& phi,
                            const Tolerance& tol) -> std::optional<std::vector<double>> {
    const TracialFunctional tau(phi.codomain(), weights);
    if (auto t = is_tracial(compose_with_map(tau, phi), tol)) return t->weights();
    return std::nullopt;
  }, py::arg("weights"), py::arg("phi"), py::arg("tol") = Tolerance{},
        "Weights of tau∘phi when it is tracial, else None.");

  m.def("random_order_zero", [](const FdAlgebra& dom, const FdAlgebra& cod,
                                std::vector<std::vector<int>> mult, std::uint64_t seed,
                                bool strict_h) {
    return random_order_zero(GenSpec{dom, cod, std::move(mult), seed, strict_h});
  }, py::arg("domain"), py::arg("codomain"), py::arg("multiplicities"), py::arg("seed") = 0,
        py::arg("strict_h") = true);
  m.def("random_hom", [](const FdAlgebra& dom, const FdAlgebra& cod,
                         std::vector<std::vector<int>> mult, std::uint64_t seed) {
    return random_hom(GenSpec{dom, cod, std::move(mult), seed, true});
  }, py::arg("domain"), py::arg("codomain"), py::arg("multiplicities"), py::arg("seed") = 0);
  m.def("random_cp_map", &random_cp_map, py::arg("domain"), py::arg("codomain"),
        py::arg("kraus_count") = 2, py::arg("seed") = 0);
  m.def("perturb", &perturb, py::arg("phi"), py::arg("epsilon"), py::arg("seed") = 0);
}
