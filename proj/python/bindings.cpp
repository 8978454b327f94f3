#include "jordanlab/cli.hpp"
#include "jordanlab/commutation.hpp"
#include "jordanlab/counterexamples.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/families.hpp"
#include "jordanlab/sea.hpp"
#include "jordanlab/spectral.hpp"
#include "jordanlab/suite.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace jordanlab;

namespace {

// pybind11 holders cannot be shared_ptr<const T>.
using AlgebraHolder = std::shared_ptr<Algebra>;

AlgebraHolder hold(const AlgebraPtr& a) { return std::const_pointer_cast<Algebra>(a); }

py::dict report_dict(const TheoremReport& r) {
  py::dict d;
  d["op_commute"] = r.op_commute;
  d["assoc"] = r.assoc;
  d["assoc_mutual"] = r.assoc_mutual;
  d["squares_commute"] = r.squares_commute;
  d["positivity_applicable"] = r.positivity.applicable;
  d["q_identity"] = r.positivity.q_identity;
  d["subalgebra_dim"] = r.subalgebra_dim;
  d["borderline"] = r.borderline();
  d["verdict"] = std::string(to_string(r.verdict));
  py::dict residuals;
  for (const auto& x : r.residuals) residuals[py::str(x.name)] = x.value;
  d["residuals"] = residuals;
  return d;
}

py::dict panel_dict(const QPanel& p) {
  py::dict d;
  d["qq_commute"] = p.qq_commute;
  d["q_cross_identity"] = p.q_cross_identity;
  d["full_commute"] = p.full_commute;
  d["positivity_applicable"] = p.positivity_applicable;
  d["agree"] = p.agree;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jordanlab, m) {
  m.doc() = "Numerical toolkit for Euclidean Jordan algebras";

  static py::exception<Error> error(m, "JordanError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Algebra, AlgebraHolder>(m, "Algebra")
      .def_property_readonly("name", &Algebra::name)
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("basis_labels", &Algebra::basis_labels)
      .def_property_readonly("gram", &Algebra::gram)
      .def("element", [](const Algebra& a, const Vector& v) { return a.element(v); }, py::arg("coords"))
      .def("unit", &Algebra::unit)
      .def("zero", &Algebra::zero)
      .def("basis", &Algebra::basis, py::arg("i"))
      .def("__repr__", [](const Algebra& a) { return "<Algebra " + a.name() + " dim=" + std::to_string(a.dim()) + ">"; });

  py::class_<Element>(m, "Element")
      .def_property_readonly("algebra", [](const Element& x) { return hold(x.algebra()); })
      .def_property_readonly("coords", &Element::coords)
      .def("norm", &Element::norm)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__mul__", [](const Element& a, double s) { return a * s; })
      .def("__rmul__", [](const Element& a, double s) { return a * s; })
      .def("__repr__", [](const Element& a) {
        std::ostringstream s;
        s << "<Element " << a.algebra()->name() << " [" << a.coords().transpose() << "]>";
        return s.str();
      });

  m.def("family", [](const std::string& spec) { return hold(make_family(spec).algebra); }, py::arg("spec"),
        "Algebra for a family spec such as 'herm_c:2', 'spin:5' or 'albert'.");
  m.def("jordan_mul", &jordan_mul);
  m.def("power", &power);
  m.def("t_operator", [](const Element& a) { return t_operator(a).entries(); });
  m.def("q_operator", [](const Element& a) { return q_operator(a).entries(); });
  m.def("identity_residual", [](const Element& a, const Element& b, const Element& c) {
    const IdentityResiduals r = identity_residuals(a, b, c);
    return r.max() / r.scale;
  });

  m.def("spectrum", [](const Element& a) {
    const SpectralDecomposition sd = spectral_decompose(a);
    return py::make_tuple(sd.eigenvalues, sd.idempotents);
  });
  m.def("apply_function",
        [](const Element& a, const std::function<double(double)>& f) { return apply_function(a, f); });
  m.def("sqrt", [](const Element& a) { return jordanlab::sqrt(a); });
  m.def("order_unit_norm", &order_unit_norm);
  m.def("is_positive", &is_positive);

  m.def("commute_residual", &commute_residual);
  m.def("operator_commute", &operator_commute, py::arg("a"), py::arg("b"), py::arg("tol") = tol::kCommute);
  m.def("commutant", [](const std::vector<Element>& s) { return commutant(s).basis; });
  m.def("theorem_report", [](const Element& a, const Element& b, double t) { return report_dict(theorem_report(a, b, t)); },
        py::arg("a"), py::arg("b"), py::arg("tol") = tol::kCommute);
  m.def("q_panel", [](const Element& a, const Element& b, double t) { return panel_dict(q_commutation_panel(a, b, t)); },
        py::arg("a"), py::arg("b"), py::arg("tol") = tol::kCommute);

  m.def("seq_product", [](const Element& a, const Element& b) {
    return seq_product(Effect(a), Effect(b)).element();
  });
  m.def("is_effect", &Effect::is_effect);

  m.def("counterexample_names", &counterexample_names);
  m.def("counterexample_matches", [](const std::string& name) { return counterexample(name).matches(); });
  m.def("suite_records", [](const std::string& spec, int trials, std::uint64_t seed) {
    return format_records(run_suite(make_family(spec), trials, seed));
  }, py::arg("spec"), py::arg("trials"), py::arg("seed"));
  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
