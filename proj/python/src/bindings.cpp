#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grmds/cli.hpp"
#include "grmds/code_oracle.hpp"
#include "grmds/json_io.hpp"
#include "grmds/vandermonde.hpp"

namespace py = pybind11;
using namespace grmds;

namespace {

// pybind11 holders cannot be shared_ptr<const T>, so the ring handle is wrapped.
struct PyRing {
  Ring ring;
};

RingElement to_element(const Ring& ring, const py::handle& value) {
  if (py::isinstance<RingElement>(value)) return value.cast<RingElement>();
  if (py::isinstance<py::int_>(value)) return ring->from_int(value.cast<std::int64_t>());
  return ring->element(value.cast<std::vector<std::int64_t>>());
}

std::vector<RingElement> to_elements(const Ring& ring, const py::iterable& values) {
  std::vector<RingElement> out;
  for (const auto& v : values) out.push_back(to_element(ring, v));
  return out;
}

GRMatrix to_matrix(const PyRing& r, const std::vector<std::vector<py::object>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<RingElement> flat;
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix");
    for (const auto& x : row) flat.push_back(to_element(r.ring, x));
  }
  return GRMatrix(r.ring, rows.size(), cols, std::move(flat));
}

std::vector<std::vector<std::vector<Coeff>>> matrix_coeffs(const GRMatrix& a) {
  std::vector<std::vector<std::vector<Coeff>>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r].push_back(a.at(r, c).coeffs());
  }
  return out;
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict d;
  d["mds"] = rep.mds;
  d["witness"] = rep.witness ? py::make_tuple(rep.witness->rows, rep.witness->cols) : py::object(py::none());
  d["quasi_involutory"] = rep.quasi_involutory ? py::object(py::bool_(*rep.quasi_involutory)) : py::none();
  d["min_distance"] = rep.min_distance ? py::object(py::int_(*rep.min_distance)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "MDS matrices over Galois rings from skew polynomials";

  py::register_exception<Error>(m, "GrmdsError", PyExc_ValueError);

  py::class_<PyRing>(m, "Ring")
      .def_property_readonly("p", [](const PyRing& r) { return r.ring->p(); })
      .def_property_readonly("s", [](const PyRing& r) { return r.ring->s(); })
      .def_property_readonly("m", [](const PyRing& r) { return r.ring->m(); })
      .def_property_readonly("e", [](const PyRing& r) { return r.ring->e(); })
      .def_property_readonly("q", [](const PyRing& r) { return r.ring->q(); })
      .def_property_readonly("modulus", [](const PyRing& r) { return r.ring->modulus(); })
      .def_property_readonly("sigma_order", [](const PyRing& r) { return r.ring->sigma_order(); })
      .def_property_readonly("residue_size", [](const PyRing& r) { return r.ring->residue_size(); })
      .def_property_readonly("element_count", [](const PyRing& r) { return r.ring->element_count(); })
      .def("zero", [](const PyRing& r) { return r.ring->zero(); })
      .def("one", [](const PyRing& r) { return r.ring->one(); })
      .def("zeta", [](const PyRing& r) { return r.ring->zeta(); })
      .def("teichmuller_generator", [](const PyRing& r) { return r.ring->teichmuller_generator(); })
      .def("element", [](const PyRing& r, const py::object& v) { return to_element(r.ring, v); }, py::arg("value"))
      .def("__repr__", [](const PyRing& r) { return "<Ring " + r.ring->description() + ">"; });

  m.def(
      "make_ring",
      [](std::uint64_t p, unsigned s, unsigned mdeg, std::optional<std::vector<std::int64_t>> modulus, unsigned e) {
        return PyRing{make_ring(p, s, mdeg, std::move(modulus), e)};
      },
      py::arg("p"), py::arg("s") = 1, py::arg("m") = 1, py::arg("modulus") = py::none(), py::arg("e") = 0);

  py::class_<RingElement>(m, "RingElement")
      .def_property_readonly("coeffs", &RingElement::coeffs)
      .def("is_zero", &RingElement::is_zero)
      .def("is_unit", &RingElement::is_unit)
      .def("is_nilpotent", &RingElement::is_nilpotent)
      .def("pow", &RingElement::pow)
      .def("inverse", [](const RingElement& x) { return inverse(x); })
      .def("sigma", [](const RingElement& x, std::int64_t i) { return apply_sigma(x, i); }, py::arg("i") = 1)
      .def("residue", [](const RingElement& x) { return project_residue(x); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &RingElement::to_string)
      .def("__repr__", [](const RingElement& x) { return "<RingElement " + x.to_string() + ">"; });

  py::class_<SkewPoly>(m, "SkewPoly")
      .def(py::init([](const PyRing& r, const py::iterable& coeffs) { return SkewPoly(r.ring, to_elements(r.ring, coeffs)); }),
           py::arg("ring"), py::arg("coeffs"))
      .def_property_readonly("coeffs", &SkewPoly::coeffs)
      .def_property_readonly("degree", &SkewPoly::degree)
      .def("right_eval", &right_eval)
      .def("divmod", [](const SkewPoly& f, const SkewPoly& g) {
        DivMod qr = right_divmod(f, g);
        return py::make_tuple(qr.quotient, qr.remainder);
      })
      .def("__mul__", &smul)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__str__", &SkewPoly::to_string)
      .def("__repr__", [](const SkewPoly& f) { return "<SkewPoly " + f.to_string() + ">"; });

  m.def("build_w_poly", &build_w_poly, py::arg("roots"));
  m.def("right_divides", &right_divides, py::arg("g"), py::arg("f"));
  m.def("sigma_norm", &sigma_norm, py::arg("beta"), py::arg("i"));

  m.def("companion", [](const SkewPoly& g) { return matrix_coeffs(companion(g)); }, py::arg("g"));
  m.def("twisted_chain", [](const SkewPoly& g, unsigned t) { return matrix_coeffs(twisted_chain(g, t)); },
        py::arg("g"), py::arg("t"));
  m.def("chain_report", [](const SkewPoly& g, unsigned t) { return report_dict(is_mds(twisted_chain(g, t))); },
        py::arg("g"), py::arg("t"));
  m.def("is_mds", [](const PyRing& r, const std::vector<std::vector<py::object>>& rows) {
    return report_dict(is_mds(to_matrix(r, rows)));
  }, py::arg("ring"), py::arg("rows"));
  m.def("determinant", [](const PyRing& r, const std::vector<std::vector<py::object>>& rows) {
    return determinant(to_matrix(r, rows));
  }, py::arg("ring"), py::arg("rows"));
  m.def("min_distance", [](const PyRing& r, const std::vector<std::vector<py::object>>& rows) {
    return min_distance(CodeInstance(to_matrix(r, rows)));
  }, py::arg("ring"), py::arg("rows"));
  m.def("check_quasi_involutory", &check_quasi_involutory, py::arg("g"));
  m.def("weight_criterion_support", &weight_criterion_support, py::arg("g"), py::arg("t"));

  m.def("_construct_json", [](const std::string& spec) {
    return result_to_json(construct(spec_from_json(Json::parse(spec)))).dump();
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
