#include <pybind11/pybind11.h>

#include "symcubic/report.hpp"

namespace py = pybind11;
using namespace symcubic;

namespace {

CubicForm surface(const std::string& text, const std::string& field) { return parse_cubic(parse_field(field), text); }

} // namespace

// Results cross the boundary as JSON text; the package decodes them.
PYBIND11_MODULE(_symcubic, m) {
  m.doc() = "Cubic surfaces over finite fields";
  m.attr("__version__") = kVersion;
  py::register_exception<Error>(m, "SymcubicError", PyExc_ValueError);

  m.def("field_info", [](const std::string& f) { return field_info(parse_field(f)).dump(); });
  m.def("singular", [](const std::string& s, const std::string& f, int depth) { return singular_report(surface(s, f), depth).dump(); },
        py::arg("surface"), py::arg("field"), py::arg("depth") = kDefaultSingularDepth);
  m.def("lines", [](const std::string& s, const std::string& f, int max_split) {
    return lines_report(enumerate_lines(surface(s, f), max_split)).dump();
  }, py::arg("surface"), py::arg("field"), py::arg("max_split") = kDefaultMaxSplit);
  m.def("galois", [](const std::string& s, const std::string& f, int max_split) {
    return galois_report(enumerate_lines(surface(s, f), max_split)).dump();
  }, py::arg("surface"), py::arg("field"), py::arg("max_split") = kDefaultMaxSplit);
  m.def("aut", [](const std::string& s, const std::string& f, int max_split, int jobs) {
    py::gil_scoped_release release;
    return aut_report(automorphism_group(surface(s, f), max_split, jobs)).dump();
  }, py::arg("surface"), py::arg("field"), py::arg("max_split") = kDefaultMaxSplit, py::arg("jobs") = 1);
  m.def("isom", [](const std::string& a, const std::string& b, const std::string& f, int max_split) {
    CubicForm s1 = surface(a, f), s2 = surface(b, f);
    auto w = isomorphism_test(s1, s2, max_split);
    return isom_report(w, enumerate_lines(s1, max_split).splitting_degree(), enumerate_lines(s2, max_split).splitting_degree()).dump();
  }, py::arg("a"), py::arg("b"), py::arg("field"), py::arg("max_split") = kDefaultMaxSplit);
  m.def("weyl_table", [] { return weyl_table().dump(); });
  m.def("verify", [](const std::string& suite) {
    py::gil_scoped_release release;
    return verify_report(run_suite(suite)).dump();
  });
}
