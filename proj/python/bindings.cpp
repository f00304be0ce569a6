#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holecap/capacity.hpp"
#include "holecap/eigenbasis.hpp"
#include "holecap/errors.hpp"
#include "holecap/io.hpp"
#include "holecap/reference.hpp"
#include "holecap/splitting.hpp"
#include "holecap/validate.hpp"

namespace py = pybind11;
using namespace holecap;

namespace {

// Reports cross the boundary as JSON text and are parsed on the Python side.
std::string expansion_json(const HoleSetting& s, const AnalyticGerm& a, const AnalyticGerm& b, int order) {
  return io::expansion_to_json(series_coefficients(s, series_densities(s, a, order), b)).dump();
}

std::string predict_json(int index, const Vec2& x0, const ClosedCurve& hole, const std::vector<double>& eps,
                         int nodes) {
  const auto modes = disk_spectrum(index + 2);
  const double lam = modes.at(index - 1).lambda;
  std::vector<AnalyticGerm> germs;
  for (const auto& m : modes)
    if (std::abs(m.lambda - lam) <= 1e-12 * lam) germs.push_back(germ_at(m, x0, 10));
  const HoleSetting s(ClosedCurve::circle(1.0, -x0), hole, nodes);
  return io::report_to_json(predict_branches(order_decomposition(germs), s, lam), eps).dump();
}

}  // namespace

PYBIND11_MODULE(_holecap, m) {
  m.doc() = "Capacities of small holes and eigenvalue splitting";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<ClosedCurve>(m, "ClosedCurve")
      .def_static("circle", &ClosedCurve::circle, py::arg("radius"), py::arg("center") = Vec2::Zero())
      .def_static("ellipse", &ClosedCurve::ellipse, py::arg("a"), py::arg("b"), py::arg("center") = Vec2::Zero())
      .def_static("trig", &ClosedCurve::trig, py::arg("center"), py::arg("xc"), py::arg("xs"), py::arg("yc"),
                  py::arg("ys"))
      .def("point", &ClosedCurve::point)
      .def("area", [](const ClosedCurve& c) { return area(c); });

  py::class_<AnalyticGerm>(m, "AnalyticGerm")
      .def(py::init<int>(), py::arg("degree"))
      .def_static("from_terms", &AnalyticGerm::from_terms, py::arg("terms"), py::arg("degree") = -1)
      .def_property_readonly("degree", &AnalyticGerm::degree)
      .def("coeff", &AnalyticGerm::coeff)
      .def("set", &AnalyticGerm::set)
      .def("eval", &AnalyticGerm::eval)
      .def("order", &AnalyticGerm::order);

  py::class_<HoleSetting>(m, "HoleSetting")
      .def(py::init<const ClosedCurve&, const ClosedCurve&, int>(), py::arg("outer"), py::arg("hole"),
           py::arg("n") = 256)
      .def_property_readonly("eps0", &HoleSetting::eps0)
      .def_property_readonly("nodes", &HoleSetting::nodes);

  m.def("direct_capacity",
        py::overload_cast<const HoleSetting&, const AnalyticGerm&, const AnalyticGerm&, double>(&direct_capacity),
        py::arg("setting"), py::arg("germ_a"), py::arg("germ_b"), py::arg("eps"));
  m.def("q_form", &Q_form, py::arg("setting"), py::arg("germ_a"), py::arg("germ_b"));
  m.def("r0", &r0, py::arg("setting"));
  m.def("expansion_json", &expansion_json, py::arg("setting"), py::arg("germ_a"), py::arg("germ_b"),
        py::arg("order"));
  m.def("concentric_capacity", &concentric_capacity, py::arg("eps"));
  m.def("concentric_eigenvalues", [](double eps, int count) {
    std::vector<double> out;
    for (const auto& v : concentric_spectrum(eps, count)) out.push_back(v.lambda);
    return out;
  });
  m.def("eccentric_eigenvalues", [](double eps, const Vec2& x0, int count, int M) {
    std::vector<double> out;
    for (const auto& v : eccentric_spectrum(eps, x0, count, M).eigenvalues) out.push_back(v.lambda);
    return out;
  }, py::arg("eps"), py::arg("x0"), py::arg("count"), py::arg("multipoles") = 12);
  m.def("disk_eigenvalues", [](int count) {
    std::vector<double> out;
    for (const auto& v : disk_spectrum(count)) out.push_back(v.lambda);
    return out;
  });
  m.def("predict_json", &predict_json, py::arg("index"), py::arg("x0"), py::arg("hole"), py::arg("eps"),
        py::arg("nodes") = 256);
  m.def("validate_json", [](std::vector<int> ids, std::uint64_t seed) {
    ValidateOptions opts;
    opts.seed = seed;
    std::vector<CriterionResult> res;
    for (int id : ids) res.push_back(run_criterion(id, opts));
    return results_to_json(res).dump();
  }, py::arg("ids"), py::arg("seed") = 0);
}
