// Python bindings: string-in / dict-out wrappers over the core operations.
// Ring, matrix, quadruple and element arguments use the same literal grammar
// as the CLI; results mirror the CLI's JSON reports.

#include <pybind11/pybind11.h>

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "umx/bezout.hpp"
#include "umx/census.hpp"
#include "umx/construct.hpp"
#include "umx/decide.hpp"
#include "umx/mat.hpp"
#include "umx/report.hpp"
#include "umx/ring.hpp"
#include "umx/ringspec.hpp"

namespace py = pybind11;

namespace {

using namespace umx;
using nlohmann::json;

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

Ring make_ring(const std::string& spec) {
  return ring_make(parse_ring_spec(spec));
}

void check_budget(const Ring& ring, std::uint64_t max_cardinality) {
  if (!ring->finite()) return;
  const std::uint64_t card = ring->card_u64();
  if (card > max_cardinality)
    fail(Err::BudgetExceeded,
         "ring cardinality " + std::to_string(card) +
             " exceeds max_cardinality=" + std::to_string(max_cardinality));
}

py::object py_ring_info(const std::string& ring_spec) {
  return json_to_py(ring_info_json(make_ring(ring_spec)));
}

py::object py_classify(const std::string& ring_spec, const std::string& matrix,
                       std::uint64_t max_cardinality) {
  Ring ring = make_ring(ring_spec);
  check_budget(ring, max_cardinality);
  Mat2 a = parse_matrix2(matrix, ring);
  Classification cls = classify(a);
  return json_to_py(classification_json(ring, a, cls));
}

py::object py_census(const std::string& ring_spec,
                     std::uint64_t max_cardinality, bool timings) {
  Ring ring = make_ring(ring_spec);
  CensusOptions opts;
  opts.max_cardinality = max_cardinality;
  CensusReport rep;
  {
    py::gil_scoped_release release;
    rep = run_census(ring, opts);
  }
  return json_to_py(census_to_json(rep, timings));
}

py::object py_snf(const std::string& matrix, const std::string& ring_spec) {
  Ring ring = make_ring(ring_spec);
  const Kind kind = ring->descriptor().kind;
  if (kind != Kind::Integers && kind != Kind::PolyOverPrime)
    fail(Err::UnsupportedRing,
         "smith normal form needs Z or GF(p)[x], got " + ring->name());
  // square 2x2 and 3x3 literals cover the library surface exposed here
  std::vector<std::vector<Elem>> rows;
  try {
    Mat2 m = parse_matrix2(matrix, ring);
    rows = {{m.a, m.b}, {m.c, m.d}};
  } catch (const UmxError&) {
    Mat3 m = parse_matrix3(matrix, ring);
    rows = {{m.e[0], m.e[1], m.e[2]},
            {m.e[3], m.e[4], m.e[5]},
            {m.e[6], m.e[7], m.e[8]}};
  }
  return json_to_py(snf_json(smith_normal_form(mat_mn(rows))));
}

py::object py_hensel_lift(const std::string& matrix, const py::object& t,
                          unsigned iters) {
  Ring ring = make_ring("Z");
  Mat2 a = parse_matrix2(matrix, ring);
  Elem t_elem = parse_element(py::str(t).cast<std::string>(), ring);
  return json_to_py(hensel_json(hensel_det_lift(a, t_elem, iters)));
}

py::object py_extend(const std::string& matrix, const std::string& ring_spec,
                     std::uint64_t max_cardinality) {
  Ring ring = make_ring(ring_spec);
  check_budget(ring, max_cardinality);
  return json_to_py(extend_report(parse_matrix2(matrix, ring)));
}

py::object py_det_lift(const std::string& matrix, const std::string& ring_spec,
                       std::uint64_t max_cardinality) {
  Ring ring = make_ring(ring_spec);
  check_budget(ring, max_cardinality);
  return json_to_py(detlift_report(parse_matrix2(matrix, ring)));
}

py::object py_nonfull(const std::string& matrix, const std::string& ring_spec) {
  Ring ring = make_ring(ring_spec);
  return json_to_py(nonfull_json(nonfull_factor(parse_matrix2(matrix, ring))));
}

py::object py_verify(const std::string& ring_spec, const std::string& matrix,
                     const std::string& quad, const std::string& role,
                     const py::object& v) {
  Ring ring = make_ring(ring_spec);
  Mat2 a = parse_matrix2(matrix, ring);
  std::array<Elem, 4> q = parse_quad(quad, ring);
  std::optional<Elem> ve;
  if (!v.is_none())
    ve = parse_element(py::str(v).cast<std::string>(), ring);
  else if (role == "extension")
    ve = ring->zero();
  return json_to_py(verify_report(a, q, role, ve));
}

}  // namespace

PYBIND11_MODULE(umx, m) {
  m.doc() =
      "Exact completions, determinant lifts and exhaustive censuses for "
      "unimodular 2x2 matrices over commutative rings";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UmxError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("ring_info", &py_ring_info, py::arg("ring"),
        "Descriptor, cardinality and capability flags of a ring spec.");
  m.def("classify", &py_classify, py::arg("ring"), py::arg("matrix"),
        py::arg("max_cardinality") = 12,
        "Decide all five completion properties of a 2x2 matrix over a "
        "finite ring; returns witnesses (None where absent).");
  m.def("census", &py_census, py::arg("ring"), py::arg("max_cardinality") = 12,
        py::arg("timings") = false,
        "Classify every unimodular 2x2 matrix over a finite ring and "
        "machine-check the theorem verdicts.");
  m.def("snf", &py_snf, py::arg("matrix"), py::arg("ring") = "Z",
        "Smith normal form U*D*V = M over Z or GF(p)[x] for a 2x2 or 3x3 "
        "literal.");
  m.def("hensel_lift", &py_hensel_lift, py::arg("matrix"), py::arg("t"),
        py::arg("iters") = 1,
        "Hensel determinant lift over Z: B congruent to A mod t with "
        "det(B) divisible by t^(2^iters).");
  m.def("extend", &py_extend, py::arg("matrix"), py::arg("ring") = "Z",
        py::arg("max_cardinality") = 12,
        "Extend a unimodular 2x2 matrix to a bordered 3x3 determinant-1 "
        "matrix (synthesis over Z, search over finite rings).");
  m.def("det_lift", &py_det_lift, py::arg("matrix"), py::arg("ring") = "Z",
        py::arg("max_cardinality") = 12,
        "Find a unimodular determinant-0 matrix congruent to A modulo "
        "det(A).");
  m.def("nonfull", &py_nonfull, py::arg("matrix"), py::arg("ring") = "Z",
        "Factor a zero-determinant 2x2 matrix as column times row.");
  m.def("verify", &py_verify, py::arg("ring"), py::arg("matrix"),
        py::arg("quad"), py::arg("role"), py::arg("v") = py::none(),
        "Check a witness quadruple against its role equation; raises "
        "ValueError when the equation fails.");
}
