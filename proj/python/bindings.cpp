// Thin Python layer. Results cross the boundary as JSON text in the same
// encoding the command line tool prints; the package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverlab/json_io.hpp"

namespace py = pybind11;
using namespace quiverlab;

namespace {

RankConditions ranks(int n, const std::vector<std::vector<int>>& r) {
  RankConditions rc(n, r);
  require_valid(rc);
  return rc;
}

std::string dump(const json::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_quiverlab, m) {
  static py::exception<QuiverError> error(m, "QuiverError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const QuiverError& e) {
      py::set_error(error, (e.kind() + ": " + e.what()).c_str());
    }
  });

  m.def("zelevinsky", [](int n, const std::vector<std::vector<int>>& r) {
    return dump(json::to_json(zelevinsky(ranks(n, r))));
  });
  m.def("lace_array", [](int n, const std::vector<std::vector<int>>& r) {
    return dump(json::to_json(lace_array(ranks(n, r))));
  });
  m.def("expected_codim",
        [](int n, const std::vector<std::vector<int>>& r) { return expected_codim(ranks(n, r)); });
  m.def("wmin", [](int n, const std::vector<std::vector<int>>& r) {
    json::Json out = json::Json::array();
    for (const auto& W : wmin(ranks(n, r))) out.push_back(json::to_json(W));
    return dump(out);
  });
  m.def("quiver_poly", [](int n, const std::vector<std::vector<int>>& r) {
    return dump(json::to_json(quiver_poly(ranks(n, r))));
  });
  m.def("quiver_coeffs", [](int n, const std::vector<std::vector<int>>& r) {
    return dump(json::to_json(quiver_coeffs(ranks(n, r))));
  });
  m.def("component_check", [](int n, const std::vector<std::vector<int>>& r) {
    return dump(json::to_json(component_check(ranks(n, r))));
  });
  m.def(
      "schubert",
      [](const std::vector<int>& w, bool is_double) {
        const Permutation p(w);
        return dump(json::to_json(is_double ? schubert_double(p) : schubert_single(p)));
      },
      py::arg("w"), py::arg("double") = false);
  m.def("split_a", [](const std::vector<int>& w, const std::vector<int>& breaks) {
    return dump(json::to_json(split_A(Permutation(w), breaks)));
  });
  m.def("theorem2_check", [](const std::vector<int>& w, int n) {
    return dump(json::to_json(theorem2_check(Permutation(w), n)));
  });
}
