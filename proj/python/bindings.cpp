#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "semiconj/decompose.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/invariant_curves.hpp"
#include "semiconj/julia_numeric.hpp"
#include "semiconj/poly_io.hpp"
#include "semiconj/semiconj_engine.hpp"
#include "semiconj/special_forms.hpp"

namespace py = pybind11;
using namespace semiconj;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict witness_dict(const SemiconjugacyWitness& w) {
  py::dict d;
  d["A"] = w.A;
  d["X"] = w.X;
  d["B"] = w.B;
  return d;
}

SearchBudget budget_for(const Polynomial& b, long degree_cap) { return SearchBudget::for_degree(b.degree(), degree_cap); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polynomial semiconjugacy engine over Q(i).";

  static py::handle error_type;
  error_type = py::exception<Error>(m, "SemiconjError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return parse_polynomial(text); }), py::arg("text"))
      .def(py::init([](long c) { return Polynomial(c); }), py::arg("constant"))
      .def_property_readonly("degree", &Polynomial::degree)
      .def("__call__", [](const Polynomial& p, const Polynomial& q) { return compose(p, q); })
      .def("__call__", [](const Polynomial& p, std::complex<double> z) { return p.evaluate(z); })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__hash__", [](const Polynomial& p) { return py::hash(py::str(p.to_string())); })
      .def("__str__", [](const Polynomial& p) { return p.to_string(); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("to_json", [](const Polynomial& p) { return to_python(to_json(p)); })
      .def("derivative", &Polynomial::derivative)
      .def("monic", &Polynomial::monic);
  py::implicitly_convertible<py::str, Polynomial>();
  py::implicitly_convertible<py::int_, Polynomial>();

  m.attr("DEFAULT_DEGREE_CAP") = kDefaultDegreeCap;

  m.def("compose", [](const Polynomial& p, const Polynomial& q, long cap) { return compose(p, q, cap); },
        py::arg("p"), py::arg("q"), py::arg("degree_cap") = kDefaultDegreeCap);
  m.def("iterate", [](const Polynomial& p, unsigned k, long cap) { return iterate(p, k, cap); }, py::arg("p"),
        py::arg("k"), py::arg("degree_cap") = kDefaultDegreeCap);
  m.def("chebyshev", &chebyshev, py::arg("n"));

  m.def("left_quotient", &left_quotient, py::arg("p"), py::arg("h"));
  m.def(
      "right_quotient",
      [](const Polynomial& p, const Polynomial& g) -> py::object {
        const RightQuotient r = try_right_quotient(p, g);
        switch (r.status) {
          case QuotientStatus::Found: return py::cast(r.value);
          case QuotientStatus::FieldObstruction: throw Error(ErrorKind::FieldObstruction, "right quotient needs coefficients outside Q(i)");
          case QuotientStatus::Absent: break;
        }
        return py::none();
      },
      py::arg("p"), py::arg("g"));
  m.def(
      "right_factor_of_degree",
      [](const Polynomial& p, int d) -> py::object {
        auto f = right_factor_of_degree(p, d);
        if (!f) return py::none();
        return py::make_tuple(f->left, f->right);
      },
      py::arg("p"), py::arg("d"));

  m.def(
      "classify_special",
      [](const Polynomial& p) {
        const SpecialClassification c = classify_special(p);
        py::dict d;
        d["kind"] = to_string(c.kind);
        d["witness"] = c.witness ? py::cast(c.witness->as_polynomial()) : py::none();
        return d;
      },
      py::arg("p"));
  m.def("conjugate_over_c", &conjugate_over_c, py::arg("p"), py::arg("q"));

  m.def(
      "solve_a",
      [](const Polynomial& x, const Polynomial& b) -> py::object {
        auto w = solve_A(x, b);
        return w ? py::cast(w->A) : py::none();
      },
      py::arg("x"), py::arg("b"));
  m.def(
      "solve_b",
      [](const Polynomial& a, const Polynomial& x) -> py::object {
        auto w = solve_B(a, x);
        return w ? py::cast(w->B) : py::none();
      },
      py::arg("a"), py::arg("x"));
  m.def("is_semiconjugacy", &is_semiconjugacy, py::arg("a"), py::arg("x"), py::arg("b"));
  m.def(
      "enumerate_e",
      [](const Polynomial& b, long cap) {
        py::list out;
        for (const auto& w : enumerate_E(b, budget_for(b, cap))) out.append(witness_dict(w));
        return out;
      },
      py::arg("b"), py::arg("degree_cap") = kDefaultDegreeCap);
  m.def(
      "are_equivalent",
      [](const Polynomial& a, const Polynomial& b, long cap) {
        const Equivalence e = are_equivalent(a, b, budget_for(b, cap));
        py::dict d;
        d["verdict"] = to_string(e.verdict);
        d["reason"] = e.reason;
        d["conjugacy"] = e.conjugacy ? py::cast(e.conjugacy->as_polynomial()) : py::none();
        if (e.certificate) {
          d["certificate"] = py::dict(py::arg("X") = e.certificate->X, py::arg("Y") = e.certificate->Y,
                                      py::arg("d") = e.certificate->d);
        } else {
          d["certificate"] = py::none();
        }
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("degree_cap") = kDefaultDegreeCap);
  m.def(
      "universal_pair",
      [](const Polynomial& b, long cap) {
        const UniversalPair u = universal_pair(b, budget_for(b, cap));
        py::dict d;
        d["A"] = u.A;
        d["X"] = u.X;
        d["bound"] = static_cast<double>(u.bound);
        return d;
      },
      py::arg("b"), py::arg("degree_cap") = kDefaultDegreeCap);

  m.def(
      "build_curve",
      [](const Polynomial& pi, const Polynomial& rho, const Polynomial& h, const Polynomial& f, const Polynomial& g) {
        const CurveSystem c = build_curve({pi, rho, h}, f, g);
        py::dict d;
        d["u"] = c.u;
        d["v"] = c.v;
        d["t"] = c.t;
        d["curve"] = curve_to_string(c.u, c.v);
        return d;
      },
      py::arg("pi"), py::arg("rho"), py::arg("h"), py::arg("f"), py::arg("g"));
  m.def(
      "verify_invariant",
      [](const std::string& curve, const Polynomial& f, const Polynomial& g) {
        return verify_invariant(parse_curve(curve), f, g);
      },
      py::arg("curve"), py::arg("f"), py::arg("g"));

  m.def("escape_radius", &escape_radius, py::arg("p"));
  m.def(
      "check_preimage_identity",
      [](const Polynomial& a, const Polynomial& x, const Polynomial& b, int samples, unsigned seed, int margin,
         int cap) { return to_python(check_preimage_identity(a, x, b, samples, seed, margin, cap).to_json()); },
      py::arg("a"), py::arg("x"), py::arg("b"), py::arg("samples") = 10000, py::arg("seed") = 0,
      py::arg("margin") = kDefaultMargin, py::arg("cap") = kDefaultIterationCap);
  m.def(
      "render_pgm",
      [](const Polynomial& p, double xmin, double xmax, double ymin, double ymax, int width, int height, int cap) {
        const GridSpec spec{xmin, xmax, ymin, ymax, width, height, cap};
        return py::bytes(render_pgm(compute_grid(p, spec)));
      },
      py::arg("p"), py::arg("xmin") = -2.0, py::arg("xmax") = 2.0, py::arg("ymin") = -2.0, py::arg("ymax") = 2.0,
      py::arg("width") = 256, py::arg("height") = 256, py::arg("cap") = kDefaultIterationCap);
}
