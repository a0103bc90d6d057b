#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"
#include "strattr/error.hpp"
#include "strattr/json_io.hpp"
#include "strattr/modular.hpp"
#include "strattr/quasisturmian.hpp"
#include "strattr/sturmian.hpp"
#include "strattr/substitution.hpp"

namespace py = pybind11;
using namespace strattr;

namespace {

// Reports cross the boundary as plain dicts.
py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

PositionSet gamma_of(const py::object& o) { return position_set_from_json(from_py(o)); }

}  // namespace

PYBIND11_MODULE(_strattr, m) {
  m.doc() = "String attractors of bi-infinite words";

  static py::exception<Error> error(m, "Error");
  static py::exception<PreconditionError> precondition(m, "PreconditionError", error.ptr());
  static py::exception<ResourceError> resource(m, "ResourceError", error.ptr());
  static py::exception<ParseError> parse(m, "ParseError", error.ptr());
  static py::exception<SymbolicError> symbolic(m, "SymbolicError", error.ptr());
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      precondition(e.what());
    } catch (const ResourceError& e) {
      resource(e.what());
    } catch (const ParseError& e) {
      parse(e.what());
    } catch (const SymbolicError& e) {
      symbolic(e.what());
    } catch (const InvariantViolation& e) {
      invariant(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<BiWordSpec>(m, "Spec")
      .def_static("parse", &parse_spec, py::arg("text"))
      .def_static("load", &load_spec, py::arg("path"))
      .def_static("from_dict", [](const py::object& o) { return spec_from_json(from_py(o)); })
      .def("to_dict", [](const BiWordSpec& s) { return to_py(to_json(s)); })
      .def("dumps", &dump_spec)
      .def("window",
           [](const BiWordSpec& s, Position i, Position j) {
             Window w = window(s, i, j);
             return py::make_tuple(w.offset, to_string(w.content));
           },
           py::arg("i"), py::arg("j"))
      .def("__eq__", [](const BiWordSpec& a, const BiWordSpec& b) { return a == b; })
      .def("__repr__", [](const BiWordSpec& s) { return "Spec(" + dump_spec(s) + ")"; });

  m.def("check_attractor",
        [](const BiWordSpec& s, const py::object& gamma, std::size_t N, Position radius) {
          return to_py(to_json(check_attractor(s, gamma_of(gamma), N, radius)));
        },
        py::arg("spec"), py::arg("gamma"), py::arg("N"), py::arg("radius") = 0);
  m.def("min_span",
        [](const BiWordSpec& s, std::size_t N, Position search) {
          return to_py(to_json(min_span_bruteforce(s, N, search)));
        },
        py::arg("spec"), py::arg("N"), py::arg("search"));
  m.def("complexity",
        [](const BiWordSpec& s, std::size_t N, Position radius) {
          return factor_complexity_profile(s, N, std::max<Position>(radius, N)).counts;
        },
        py::arg("spec"), py::arg("N"), py::arg("radius") = 0);
  m.def("classify",
        [](const BiWordSpec& s, std::size_t N) {
          return to_py(to_json(finite_attractor_classifier(s, N)));
        },
        py::arg("spec"), py::arg("N") = 60);
  m.def("verify_span1",
        [](const BiWordSpec& s, std::size_t N) { return to_py(to_json(verify_span1(s, N))); },
        py::arg("spec"), py::arg("N"));
  m.def("extract",
        [](const BiWordSpec& s, std::size_t N) { return to_py(to_json(extract(s, N))); },
        py::arg("spec"), py::arg("N") = 40);
  m.def("occ_mod",
        [](const BiWordSpec& s, const std::string& w, Position k, Position radius) {
          return to_py(to_json(occ_mod(s, parse_word(w), k, radius)));
        },
        py::arg("spec"), py::arg("w"), py::arg("k"), py::arg("radius"));
  m.def("modulo_recurrent",
        [](const BiWordSpec& s, Position K, std::size_t N, Position radius) {
          return to_py(to_json(modulo_recurrent_upto(s, K, N, radius)));
        },
        py::arg("spec"), py::arg("K"), py::arg("N"), py::arg("radius") = 0);
  m.def("sparse_attractor",
        [](const BiWordSpec& s, std::size_t N, bool block) {
          const DensityBudget eta = DensityBudget::floor_log2();
          return to_py(to_json(block ? sparse_block_attractor(s, eta, N) : sparse_attractor(s, eta, N)));
        },
        py::arg("spec"), py::arg("N"), py::arg("block") = false);
  m.def("min_size", [](const std::string& w) { return min_size_bruteforce(parse_word(w)).positions; },
        py::arg("w"));
}
