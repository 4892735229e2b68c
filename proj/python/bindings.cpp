// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcc/cli.hpp"
#include "qcc/decoders.hpp"
#include "qcc/lsv.hpp"

namespace py = pybind11;
using namespace qcc;

namespace {

py::object systole_dict(const std::optional<SystoleReport>& r) {
  if (!r) return py::none();
  py::dict d;
  d["value"] = r->value;
  d["provenance"] = to_string(r->provenance);
  d["mode"] = to_string(r->mode);
  d["homology"] = r->homology;
  d["witness"] = r->witness.support();
  return d;
}

py::dict distance_dict(const DistanceReport& r) {
  py::dict d;
  d["measured"] = systole_dict(r.measured);
  d["predicted"] = r.predicted ? py::cast(*r.predicted) : py::none();
  d["note"] = r.note;
  return d;
}

py::dict outcome_dict(const DecodeOutcome& o) {
  py::dict d;
  d["status"] = to_string(o.status);
  d["correction"] = o.correction;
  d["iterations"] = o.iterations;
  d["syndrome_weights"] = o.syndrome_weights;
  d["message"] = o.message;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qcc, m) {
  m.doc() = "Quantum CSS codes from chain complexes";
  m.attr("__version__") = QCC_VERSION;

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<BitVector>(m, "BitVector")
      .def(py::init<std::size_t>(), py::arg("length"))
      .def_static("from_support", [](std::size_t n, const std::vector<std::size_t>& s) { return BitVector::from_support(n, s); })
      .def_static("from_string", &BitVector::from_string)
      .def("__len__", &BitVector::size)
      .def("__getitem__", [](const BitVector& v, std::size_t i) {
        if (i >= v.size()) throw py::index_error();
        return v.get(i);
      })
      .def("weight", &BitVector::weight)
      .def("support", &BitVector::support)
      .def("__xor__", [](const BitVector& a, const BitVector& b) { return a ^ b; })
      .def("__eq__", [](const BitVector& a, const BitVector& b) { return a == b; })
      .def("__str__", &BitVector::to_string)
      .def("__repr__", [](const BitVector& v) { return "BitVector('" + v.to_string() + "')"; });

  py::class_<BinaryMatrix>(m, "BinaryMatrix")
      .def(py::init<std::size_t, std::size_t>())
      .def_static("from_triplets",
                  [](std::size_t r, std::size_t c, const std::vector<std::pair<std::size_t, std::size_t>>& e) {
                    return BinaryMatrix::from_triplets(r, c, e);
                  })
      .def_property_readonly("rows", &BinaryMatrix::rows)
      .def_property_readonly("cols", &BinaryMatrix::cols)
      .def("nnz", &BinaryMatrix::nnz)
      .def("triplets", &BinaryMatrix::triplets)
      .def("transpose", &BinaryMatrix::transpose)
      .def("multiply", py::overload_cast<const BitVector&>(&BinaryMatrix::multiply, py::const_))
      .def("__matmul__", py::overload_cast<const BitVector&>(&BinaryMatrix::multiply, py::const_))
      .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; });

  m.def("rank", &rank);
  m.def("kernel_basis", &kernel_basis);
  m.def("in_span", &in_span);
  m.def(
      "min_weight_coset",
      [](const BinaryMatrix& rows, const BitVector& shift, double budget) {
        SearchBudget b;
        b.max_enumeration = budget;
        auto r = min_weight_coset(rows, shift, b);
        return py::make_tuple(r.weight, r.witness);
      },
      py::arg("rows"), py::arg("shift"), py::arg("budget") = double(1 << 22));

  py::class_<ChainComplex>(m, "ChainComplex")
      .def(py::init<std::vector<std::size_t>, std::vector<BinaryMatrix>>())
      .def_property_readonly("dimension", &ChainComplex::dimension)
      .def_property_readonly("face_counts", &ChainComplex::face_counts)
      .def("boundary", &ChainComplex::boundary, py::return_value_policy::copy)
      .def("coboundary", &ChainComplex::coboundary)
      .def("is_valid", [](const ChainComplex& x) { return !validate(x).has_value(); });
  m.def("homology_dim", &homology_dim);
  m.def("cohomology_dim", &cohomology_dim);
  m.def(
      "systole",
      [](const ChainComplex& x, std::size_t p, double budget, std::optional<std::size_t> cap) {
        return systole_dict(systole(x, p, {budget, cap}));
      },
      py::arg("x"), py::arg("p") = 1, py::arg("budget") = double(1 << 22), py::arg("cap") = py::none());
  m.def(
      "cosystole",
      [](const ChainComplex& x, std::size_t p, double budget, std::optional<std::size_t> cap) {
        return systole_dict(cosystole(x, p, {budget, cap}));
      },
      py::arg("x"), py::arg("p") = 1, py::arg("budget") = double(1 << 22), py::arg("cap") = py::none());

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def_static("from_maximal_faces", &SimplicialComplex::from_maximal_faces)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def("face_count", &SimplicialComplex::face_count)
      .def("face", [](const SimplicialComplex& x, std::size_t p, std::size_t i) {
        auto f = x.face(p, i);
        return std::vector<SimplicialComplex::Vertex>(f.begin(), f.end());
      })
      .def_property_readonly("chain", &SimplicialComplex::chain, py::return_value_policy::copy);
  m.def("fixture_torus", &fixture_torus, py::arg("r"), py::arg("c"));
  m.def("degree_stats", [](const SimplicialComplex& x) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto d : degree_stats(x)) out.emplace_back(d.min, d.max);
    return out;
  });
  m.def(
      "build_lsv",
      [](std::uint32_t q, std::uint32_t d, const Poly& poly, std::size_t max_size) {
        return build_quotient_complex(CyclicAlgebra::build(q, d, poly), max_size).complex;
      },
      py::arg("q"), py::arg("d"), py::arg("poly"), py::arg("max_size") = 200000);

  py::class_<BipartiteCode>(m, "BipartiteCode")
      .def_readonly("h", &BipartiteCode::h)
      .def_property_readonly("bits", &BipartiteCode::bits)
      .def_property_readonly("checks", &BipartiteCode::checks)
      .def_property_readonly("dimension", &BipartiteCode::dimension)
      .def_property_readonly("kind", [](const BipartiteCode& c) { return to_string(c.kind); });
  m.def("make_code", [](const BinaryMatrix& h) { return make_code(h); });
  m.def("path_code", &path_code, py::arg("m"));
  m.def("random_regular_ldpc", &random_regular_ldpc, py::arg("n"), py::arg("dv"), py::arg("dc"), py::arg("seed"));
  m.def("code_distance", &code_distance, py::arg("code"), py::arg("budget") = double(1 << 22));

  py::class_<ProductCode>(m, "ProductCode")
      .def_property_readonly("qubits", [](const ProductCode& p) { return p.layout().qubits(); })
      .def_property_readonly("complex", &ProductCode::complex, py::return_value_policy::copy)
      .def_property_readonly("sigma_x", &ProductCode::sigma_x, py::return_value_policy::copy)
      .def_property_readonly("sigma_z", &ProductCode::sigma_z, py::return_value_policy::copy);
  m.def("build_product", &build_product, py::arg("x"), py::arg("y"));
  m.def(
      "product_params",
      [](const ProductCode& p, double budget, std::optional<std::size_t> cap) {
        ParamsOptions o;
        o.budget = {budget, cap};
        auto r = product_params(p, o);
        py::dict d;
        d["N"] = r.n;
        d["K"] = r.k;
        d["K_provenance"] = to_string(r.k_provenance);
        d["D_X"] = distance_dict(r.dx);
        d["D_Z"] = distance_dict(r.dz);
        return d;
      },
      py::arg("p"), py::arg("budget") = double(1 << 22), py::arg("cap") = py::none());
  m.def("weight_audit", [](const ProductCode& p) {
    auto a = weight_audit(p);
    py::dict d;
    d["W_X"] = a.wx;
    d["W_Z"] = a.wz;
    d["W_X_bound"] = a.wx_bound;
    d["W_Z_bound"] = a.wz_bound;
    d["passed"] = a.passed();
    return d;
  });

  m.def("tjoin_decode", [](const std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                           const BitVector& odd) {
    Graph g;
    g.n = n;
    g.edges = edges;
    return tjoin_decode(g, odd);
  });
  m.def("x_decode", [](const ProductCode& p, const BitVector& s) { return outcome_dict(x_decode(p, s)); });
  m.def(
      "z_decode",
      [](const ProductCode& p, const SimplicialComplex& x, const BitVector& s, const std::string& decoder) {
        LocalDecoder local(x);
        if (decoder == "single") return outcome_dict(z_decode(p, s, [&](const BitVector& f) { return local.decode_single_edge(f); }));
        if (decoder != "subset") throw std::invalid_argument("decoder must be subset or single");
        return outcome_dict(z_decode(p, s, [&](const BitVector& f) { return local.decode(f); }));
      },
      py::arg("p"), py::arg("x"), py::arg("syndrome"), py::arg("decoder") = "subset");
  m.def("x_equivalent", &x_equivalent);
  m.def("z_equivalent", [](const ProductCode& p, const SimplicialComplex& x, const BitVector& e, const BitVector& c) {
    return z_equivalent(p, PotentialChecker(x.graph()), e, c);
  });
  m.def("local_decode", [](const SimplicialComplex& x, const BitVector& f) { return outcome_dict(local_coboundary_decode(x, f)); });

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the qcc command line in-process; returns (exit code, stdout, stderr).");
}
