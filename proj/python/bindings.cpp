#include "nsalg/analysis.hpp"
#include "nsalg/cli.hpp"
#include "nsalg/error.hpp"
#include "nsalg/lie.hpp"
#include "nsalg/named_elements.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace nsalg;

namespace {

Generator make_generator(const std::string& kind, const std::string& index) {
  if (kind == "C") return Generator::C();
  const HalfInt i = HalfInt::parse(index);
  if (kind == "L") {
    if (!i.is_integer()) throw Error("L index must be an integer, got " + index);
    return Generator::L(i.doubled / 2);
  }
  if (kind == "G") return Generator::G(i);
  throw Error("generator kind must be L, G or C, got " + kind);
}

Window make_window(int kmin, int kmax, int margin) {
  Window w{kmin, kmax, margin};
  w.validate();
  return w;
}

py::list reports_to_list(const std::vector<CheckReport>& reports) {
  py::list out;
  for (const CheckReport& r : reports) {
    py::dict d;
    d["name"] = r.name;
    d["status"] = to_string(r.status);
    d["params"] = r.params;
    d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
    out.append(d);
  }
  return out;
}

py::list keys_to_list(const std::vector<BasisKey>& keys) {
  py::list out;
  for (const BasisKey& k : keys) out.append(py::make_tuple(k.k, k.eps));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the Neveu-Schwarz algebra and its Gamma modules";

  py::register_exception<Error>(m, "NsalgError", PyExc_ValueError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text) { return Scalar::parse(text); }), py::arg("text"))
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
      .def("is_zero", &Scalar::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self);

  py::class_<Generator>(m, "Generator")
      .def(py::init(&make_generator), py::arg("kind"), py::arg("index") = "0")
      .def_property_readonly("parity", &Generator::parity)
      .def("__str__", &Generator::str)
      .def("__repr__", &Generator::str)
      .def(py::self == py::self);

  m.def(
      "bracket",
      [](const Generator& x, const Generator& y, const std::string& algebra) {
        const AlgebraMode mode = parse_algebra_mode(algebra);
        return bracket(LieElement(x, mode), LieElement(y, mode)).str();
      },
      py::arg("x"), py::arg("y"), py::arg("algebra") = "khat", "Super bracket of two basis elements, rendered.");

  m.def(
      "omega", [](int k, int s, int order) { return omega(k, s, order).str(); }, py::arg("k"), py::arg("s"),
      py::arg("m"), "Omega^{(m)}_{k,s} in PBW normal form.");

  py::class_<GammaModule>(m, "Module")
      .def(py::init([](const std::string& descriptor, const std::string& algebra, const std::string& convention) {
             return parse_module(descriptor, parse_algebra_mode(algebra), parse_sign_convention(convention));
           }),
           py::arg("descriptor"), py::arg("algebra") = "khat", py::arg("convention") = "corrected")
      .def_property_readonly("descriptor", &GammaModule::descriptor)
      .def(
          "act",
          [](const GammaModule& mod, const Generator& g, int k, int eps) {
            return mod.act(g, ModuleVector({k, eps})).str();
          },
          py::arg("generator"), py::arg("k"), py::arg("eps") = 0)
      .def(
          "weight", [](const GammaModule& mod, int k, int eps) { return mod.weight({k, eps}).str(); },
          py::arg("k"), py::arg("eps") = 0)
      .def(
          "axiom_residual",
          [](const GammaModule& mod, const Generator& x, const Generator& y, int k, int eps) {
            return module_axiom_residual(x, y, {k, eps}, mod).str();
          },
          py::arg("x"), py::arg("y"), py::arg("k"), py::arg("eps") = 0)
      .def("__repr__", [](const GammaModule& mod) { return "Module('" + mod.descriptor() + "')"; });

  m.def(
      "simplicity",
      [](const GammaModule& mod, int kmin, int kmax, int margin, int gen_range) {
        Verdict v = simplicity_verdict(mod, make_window(kmin, kmax, margin), gen_range);
        py::dict d;
        d["verdict"] = to_string(v.kind);
        d["certificate"] = keys_to_list(v.certificate);
        d["locus"] = v.locus;
        d["note"] = v.note;
        return d;
      },
      py::arg("module"), py::arg("kmin") = -10, py::arg("kmax") = 10, py::arg("margin") = 3, py::arg("gen_range") = 3);

  m.def(
      "find_intertwiner",
      [](const GammaModule& a, const GammaModule& b, int kmin, int kmax, int margin, int gen_range) -> py::object {
        auto t = find_intertwiner(a, b, make_window(kmin, kmax, margin), gen_range);
        if (!t) return py::none();
        py::dict d;
        d["doubled_shift"] = t->doubled_shift;
        d["parity"] = t->parity;
        d["table"] = t->str();
        return d;
      },
      py::arg("m1"), py::arg("m2"), py::arg("kmin") = -10, py::arg("kmax") = 10, py::arg("margin") = 3,
      py::arg("gen_range") = 3);

  m.def(
      "minimal_annihilator",
      [](const GammaModule& mod, int max_m, int kmin, int kmax, int margin, int sweep) {
        AnnihilatorResult r = minimal_annihilator(mod, make_window(kmin, kmax, margin), max_m, sweep);
        py::dict d;
        d["m"] = r.m;
        d["minimality_witness"] = r.minimality_witness ? py::cast(*r.minimality_witness) : py::none();
        d["gl_status"] = to_string(r.gl_report.status);
        return d;
      },
      py::arg("module"), py::arg("max_m") = 6, py::arg("kmin") = -10, py::arg("kmax") = 10, py::arg("margin") = 3,
      py::arg("sweep") = 2);

  m.def(
      "verify_jacobi", [](int range) { return reports_to_list(verify_jacobi(range)); }, py::arg("range") = 4);
  m.def(
      "verify_identities", [](int max_n) { return reports_to_list(verify_identity_catalogue(max_n)); },
      py::arg("max_n") = 8);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
