#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "hkquot/hodge.hpp"
#include "hkquot/k3_involutions.hpp"
#include "hkquot/moduli_mirror.hpp"
#include "hkquot/quotient_diamonds.hpp"
#include "hkquot/riemann_roch.hpp"
#include "hkquot/singularity.hpp"
#include "hkquot/verify.hpp"

namespace py = pybind11;
using namespace hkq;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.numerator(), q.denominator());
}

Rational from_number(py::handle h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<std::int64_t>());
  return Rational(h.attr("numerator").cast<std::int64_t>(),
                  h.attr("denominator").cast<std::int64_t>());
}

}  // namespace

PYBIND11_MODULE(_hkquot, m) {
  m.doc() = "Hodge numbers and Riemann-Roch data of Calabi-Yau quotients of hyperkahler 4-folds";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<CalabiYau4Diamond>(m, "CalabiYau4Diamond")
      .def(py::init<int, int, int, int>(), py::arg("h11"), py::arg("h21"), py::arg("h31"),
           py::arg("h22"))
      .def_property_readonly("h11", &CalabiYau4Diamond::h11)
      .def_property_readonly("h21", &CalabiYau4Diamond::h21)
      .def_property_readonly("h31", &CalabiYau4Diamond::h31)
      .def_property_readonly("h22", &CalabiYau4Diamond::h22)
      .def_property_readonly("euler", &CalabiYau4Diamond::euler)
      .def("compact", &CalabiYau4Diamond::compact)
      .def("expand", [](const CalabiYau4Diamond& d) { return d.diamond().expand(); })
      .def(py::self == py::self)
      .def("__repr__", [](const CalabiYau4Diamond& d) {
        return "CalabiYau4Diamond(" + std::to_string(d.h11()) + ", " + std::to_string(d.h21()) +
               ", " + std::to_string(d.h31()) + ", " + std::to_string(d.h22()) + ")";
      });

  py::class_<NikulinInvariants>(m, "NikulinInvariants")
      .def_readonly("r", &NikulinInvariants::r)
      .def_readonly("a", &NikulinInvariants::a)
      .def_readonly("N", &NikulinInvariants::N)
      .def_readonly("Nprime", &NikulinInvariants::Nprime)
      .def_readonly("g", &NikulinInvariants::g)
      .def_readonly("k", &NikulinInvariants::k)
      .def_property_readonly("shape",
                             [](const NikulinInvariants& i) { return std::string(to_string(i.shape)); });

  m.def("is_admissible", &is_admissible, py::arg("N"), py::arg("Nprime"));
  m.def("from_NN", &from_NN, py::arg("N"), py::arg("Nprime"));
  m.def("from_ra", &from_ra, py::arg("r"), py::arg("a"), py::arg("empty_fixed_locus") = false);
  m.def("enumerate_admissible", &enumerate_admissible);
  m.def("reference_ys_table", [] {
    py::list out;
    for (const auto& r : reference_ys_table())
      out.append(py::make_tuple(r.N, r.Nprime, r.h11, r.h21, r.h31, r.h22));
    return out;
  });

  m.def("ys_diamond", &ys_diamond, py::arg("N"), py::arg("Nprime"));
  m.def("zs_diamond", &zs_diamond, py::arg("N"), py::arg("Nprime"));
  m.def("cy_k3type", &cy_k3type, py::arg("t11"), py::arg("c"), py::arg("d"));
  m.def(
      "cy_general",
      [](std::array<int, 4> t, std::array<int, 4> f) {
        return cy_general({t[0], t[1], t[2], t[3]}, {f[0], f[1], f[2], f[3]});
      },
      py::arg("t"), py::arg("f"));
  m.def("epw_diamond", &epw_diamond);
  m.def("ys_picard_rank", &ys_picard_rank, py::arg("N"), py::arg("Nprime"));

  m.def(
      "classify",
      [](int p, std::vector<int> exps) {
        return std::string(to_string(classify(LocalSpectrum(p, std::move(exps)))));
      },
      py::arg("p"), py::arg("exponents"));
  m.def(
      "age",
      [](int p, std::vector<int> exps) { return to_fraction(age(LocalSpectrum(p, std::move(exps)))); },
      py::arg("p"), py::arg("exponents"));

  m.def("deform_dims", [](int N, int Np) {
    py::dict out;
    for (const auto& r : deform_dims(N, Np)) out[py::str(r.object)] = r.value;
    return out;
  });
  m.def("kahler_dims", [](int N, int Np) {
    py::dict out;
    for (const auto& r : kahler_dims(N, Np)) out[py::str(r.object)] = r.value;
    return out;
  });
  m.def(
      "is_mirror",
      [](const CalabiYau4Diamond& a, const CalabiYau4Diamond& b, bool hodge_only) {
        return is_mirror(a, b, hodge_only ? MirrorConvention::HodgeOnly : MirrorConvention::Strict);
      },
      py::arg("a"), py::arg("b"), py::arg("hodge_only") = false);
  m.def("mirror_scan_ys", [] { return mirror_scan_ys(); });

  m.def("chi_k3type", [](std::int64_t q) { return to_fraction(chi_k3type(q)); });
  m.def("chi_c1_zero", [](std::int64_t d4, std::int64_t d2c2, std::int64_t chio) {
    return to_fraction(chi_c1_zero(d4, d2c2, chio));
  });
  m.def(
      "chi_lift",
      [](py::handle chid, std::int64_t sq, std::int64_t cov, std::int64_t cox) {
        return to_fraction(chi_lift(from_number(chid), sq, cov, cox));
      },
      py::arg("chi_d"), py::arg("sigma_sq"), py::arg("chi_o_cover"), py::arg("chi_o_resolution"));
  m.def("h0_hilb2", &h0_hilb2);
  m.def("h0_Z", [](std::int64_t h, std::int64_t s) { return to_fraction(h0_Z(h, s)); });
  m.def("h0_Y", [](std::int64_t h, std::int64_t s, std::int64_t z) {
    return to_fraction(h0_Y(h, s, z));
  });

  m.def("verify", [] {
    const auto rep = run_verification();
    py::list checks, tensions;
    for (const auto& c : rep.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
    for (const auto& t : rep.tensions)
      tensions.append(py::make_tuple(t.location, t.fixture, t.recomputed, t.match));
    py::dict out;
    out["ok"] = rep.ok();
    out["checks"] = checks;
    out["tensions"] = tensions;
    return out;
  });
}
