#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentablock/analysis.hpp"
#include "pentablock/automorphisms.hpp"
#include "pentablock/bidisc.hpp"
#include "pentablock/error.hpp"
#include "pentablock/pentablock.hpp"
#include "pentablock/records.hpp"
#include "pentablock/sampling.hpp"
#include "pentablock/suites.hpp"
#include "pentablock/text.hpp"

namespace py = pybind11;
using namespace pentablock;

namespace {

// Points cross the boundary as tuples of Python complex numbers.
using Tuple2 = std::tuple<Complex, Complex>;
using Tuple3 = std::tuple<Complex, Complex, Complex>;

Point2 p2(const Tuple2& t) { return {std::get<0>(t), std::get<1>(t)}; }
Point3 p3(const Tuple3& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Tuple2 t2(const Point2& p) { return {p.s, p.p}; }
Tuple3 t3(const Point3& p) { return {p.a, p.s, p.p}; }

py::dict g2_dict(const G2Classification& c) {
  py::dict d;
  d["verdict"] = std::string(to_string(c.verdict));
  d["defect"] = c.defect;
  return d;
}

py::dict penta_dict(const PentaClassification& c) {
  py::dict d;
  d["verdict"] = std::string(to_string(c.verdict));
  d["hartogs_defect"] = c.hartogs_defect;
  d["base"] = g2_dict(c.base);
  d["in_closure"] = c.in_closure;
  return d;
}

py::dict report_dict(const SuiteReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["passed"] = r.passed;
  d["cases_run"] = r.cases_run;
  d["cases_passed"] = r.cases_passed;
  d["max_deviation"] = r.max_deviation;
  d["threshold"] = r.threshold;
  d["seed"] = r.seed;
  d["generator"] = r.generator;
  d["wall_time"] = r.wall_time;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pentablock and symmetrized bidisc geometry";

  static py::handle error_type =
      py::exception<Error>(m, "PentablockError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.attr("EXACT_TOL") = kExactTol;
  m.attr("PROPAGATED_TOL") = kPropagatedTol;

  // symmetrized bidisc
  m.def("sigma", [](Complex l1, Complex l2) { return t2(sigma(l1, l2)); });
  m.def("roots", [](Complex s, Complex p) {
    const RootPair r = solve_quadratic_roots(s, p);
    return std::make_tuple(r.first, r.second);
  });
  m.def("g2_classify", [](const Tuple2& pt, double tol) { return g2_dict(g2_classify(p2(pt), tol)); },
        py::arg("point"), py::arg("tol") = kExactTol);
  m.def("lift_blaschke", [](std::vector<Complex> zeros, Complex eta, const Tuple2& pt) {
    return t2(lift_blaschke_to_g2(BlaschkeProduct(eta, std::move(zeros)), p2(pt)));
  }, py::arg("zeros"), py::arg("eta") = Complex(1.0), py::arg("point"));

  // pentablock
  m.def("u_potential", [](const Tuple2& pt) { return u_potential(p2(pt)); });
  m.def("fibre_bound", [](const Tuple2& pt) { return fibre_bound(p2(pt)); });
  m.def("radius_via_parametrization", &radius_via_parametrization);
  m.def("classify", [](const Tuple3& pt, double tol) { return penta_dict(penta_classify(p3(pt), tol)); },
        py::arg("point"), py::arg("tol") = kExactTol);
  m.def("in_pentablock", [](const Tuple3& pt) { return in_pentablock(p3(pt)); });
  m.def("penta_from_matrix", [](Complex a11, Complex a12, Complex a21, Complex a22) {
    return t3(penta_from_matrix({a11, a12, a21, a22}));
  });
  m.def("matrix_witness", [](const Tuple3& pt) {
    const MatrixWitness w = matrix_witness(p3(pt));
    py::dict d;
    d["matrix"] = std::make_tuple(std::make_tuple(w.matrix.a11, w.matrix.a12),
                                  std::make_tuple(w.matrix.a21, w.matrix.a22));
    d["norm"] = w.norm;
    d["residual"] = w.residual;
    return d;
  });
  m.def("minkowski", [](const Tuple3& pt) { return minkowski_functional(p3(pt)); });
  m.def("scale", [](const Tuple3& pt, double r) { return t3(scale_quasi_homogeneous(p3(pt), r)); });

  // automorphisms
  py::class_<PentaAutomorphism>(m, "Automorphism")
      .def(py::init<Complex, Complex, Complex>(), py::arg("omega") = Complex(1.0),
           py::arg("eta") = Complex(1.0), py::arg("alpha") = Complex(0.0))
      .def_static("parse", [](const std::string& s) { return parse_automorphism(s); })
      .def_property_readonly("omega", &PentaAutomorphism::omega)
      .def_property_readonly("eta", [](const PentaAutomorphism& f) { return f.nu().eta(); })
      .def_property_readonly("alpha", [](const PentaAutomorphism& f) { return f.nu().alpha(); })
      .def("__call__", [](const PentaAutomorphism& f, const Tuple3& pt) {
        return t3(penta_aut_apply(f, p3(pt)));
      })
      .def("compose", &penta_aut_compose, "self after other")
      .def("inverse", &penta_aut_inverse)
      .def("__repr__", [](const PentaAutomorphism& f) {
        return "Automorphism(omega=" + format_complex(f.omega()) + ", eta=" +
               format_complex(f.nu().eta()) + ", alpha=" + format_complex(f.nu().alpha()) + ")";
      });

  // analysis
  m.def("levi_rank", [](const Tuple3& pt, double step) {
    return levi_form_on_boundary(p3(pt), step).rank_estimate;
  }, py::arg("point"), py::arg("step") = 1e-4);
  m.def("levi_flat_check", [](const Tuple3& pt) { return levi_flat_check_d2(p3(pt)); });

  // sampling, suites, text
  m.def("sample", [](const std::string& region, std::size_t n, std::uint64_t seed) {
    Rng rng = Rng(seed).substream(region);
    py::list out;
    for (std::size_t i = 0; i < n; ++i) {
      if (region == "penta-interior") out.append(t3(sample_penta_interior(rng)));
      else if (region == "penta-d1") out.append(t3(sample_penta_d1(rng)));
      else if (region == "penta-d2") out.append(t3(sample_penta_d2(rng)));
      else if (region == "g2-interior") out.append(t2(sample_g2_interior(rng)));
      else if (region == "g2-boundary") out.append(t2(sample_g2_boundary(rng)));
      else if (region == "g2-shilov") out.append(t2(sample_g2_shilov(rng)));
      else if (region == "royal") out.append(t2(sample_royal(rng)));
      else throw Error(ErrorKind::InvalidArgument, "unknown region '" + region + "'");
    }
    return out;
  }, py::arg("region"), py::arg("n"), py::arg("seed") = 0);
  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& suite, std::optional<std::size_t> samples,
                     std::uint64_t seed, std::optional<double> tol) {
    py::list out;
    for (const auto& r : run_suites(suite, {samples, seed, tol})) out.append(report_dict(r));
    return out;
  }, py::arg("suite") = "all", py::arg("samples") = py::none(), py::arg("seed") = 0,
        py::arg("tol") = py::none());
  m.def("parse_point", [](const std::string& text) -> py::object {
    const auto pt = parse_point(text);
    if (const auto* q = std::get_if<Point2>(&pt)) return py::cast(t2(*q));
    return py::cast(t3(std::get<Point3>(pt)));
  });
}
