#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "padyn/cli.hpp"
#include "padyn/elliptic.hpp"
#include "padyn/error.hpp"
#include "padyn/formation.hpp"
#include "padyn/json_io.hpp"
#include "padyn/padic.hpp"
#include "padyn/planar.hpp"
#include "padyn/series.hpp"

namespace py = pybind11;
using namespace padyn;

namespace {

// ints, Fractions and "a/b" strings all go through str()
Rational to_rational(const py::handle& v) { return parse_rational(py::str(v).cast<std::string>()); }

py::object to_fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(q.get_str()); }

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(to_fraction(q));
  return out;
}

WeierstrassCurve to_curve(const py::sequence& s) {
  if (py::len(s) != 5) fail(ErrorCode::ParseError, "a curve is [a1, a2, a3, a4, a6]");
  return {to_rational(s[0]), to_rational(s[1]), to_rational(s[2]), to_rational(s[3]), to_rational(s[4])};
}

py::list from_curve(const WeierstrassCurve& e) {
  py::list out;
  for (const auto& a : e.coefficients()) out.append(to_fraction(a));
  return out;
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

PadicNumber make_padic(const py::handle& v, long p, int precision) {
  return PadicNumber::from_rational(to_rational(v), p, precision);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "p-adic dynamics, elliptic curve arithmetic and field matching.";

  static py::exception<Error> error(m, "PadynError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(e.name()), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<PadicNumber>(m, "Padic")
      .def(py::init(&make_padic), py::arg("value"), py::arg("p"), py::arg("precision") = 20)
      .def_property_readonly("prime", &PadicNumber::prime)
      .def_property_readonly("precision", &PadicNumber::precision)
      .def_property_readonly("valuation", [](const PadicNumber& x) -> py::object {
        if (x.is_zero()) return py::float_(INFINITY);
        return py::int_(x.valuation());
      })
      .def_property_readonly("is_zero", &PadicNumber::is_zero)
      .def("digits", &PadicNumber::digits)
      .def("norm", &PadicNumber::norm)
      .def("unit_part", &PadicNumber::unit_part)
      .def("inverse", &PadicNumber::inverse)
      .def("__add__", [](const PadicNumber& x, const PadicNumber& y) { return x + y; })
      .def("__sub__", [](const PadicNumber& x, const PadicNumber& y) { return x - y; })
      .def("__mul__", [](const PadicNumber& x, const PadicNumber& y) { return x * y; })
      .def("__neg__", [](const PadicNumber& x) { return -x; })
      .def("__eq__", [](const PadicNumber& x, const PadicNumber& y) { return x == y; })
      .def("__str__", &PadicNumber::to_string)
      .def("__repr__", [](const PadicNumber& x) { return "Padic(" + x.to_string() + ")"; });

  m.def("same_side_of_zero", &same_side_of_zero, py::arg("x"), py::arg("y"));

  m.def(
      "invariants",
      [](const py::sequence& curve) {
        auto inv = invariants(to_curve(curve));
        py::dict d;
        d["b2"] = to_fraction(inv.b2);
        d["b4"] = to_fraction(inv.b4);
        d["b6"] = to_fraction(inv.b6);
        d["b8"] = to_fraction(inv.b8);
        d["c4"] = to_fraction(inv.c4);
        d["c6"] = to_fraction(inv.c6);
        d["delta"] = to_fraction(inv.delta);
        d["j"] = to_fraction(inv.j);
        return d;
      },
      py::arg("curve"));
  m.def(
      "formal_expansion",
      [](const py::sequence& curve, int order) { return fractions(formal_expansion(to_curve(curve), order).coefficients); },
      py::arg("curve"), py::arg("order") = 8);
  m.def(
      "series_to_curve",
      [](const py::sequence& coeffs) {
        TruncatedSeries u;
        for (auto c : coeffs) u.coefficients.push_back(to_rational(c));
        return from_curve(series_to_curve(u));
      },
      py::arg("coefficients"));
  m.def(
      "tate_reduce", [](const py::sequence& curve, long p) { return to_py(to_json(tate_reduce(to_curve(curve), p))); },
      py::arg("curve"), py::arg("p"));
  m.def(
      "l_coefficients",
      [](const py::sequence& curve, int n_max) {
        auto f = l_coefficients(to_curve(curve), n_max);
        py::dict d;
        d["level"] = py::int_(py::str(f.level.get_str()));
        d["a"] = fractions(f.coeffs);
        return d;
      },
      py::arg("curve"), py::arg("n_max") = 20);
  m.def(
      "tate_parameter",
      [](const py::handle& j, long p, int terms) { return to_py(to_json(tate_parameter(to_rational(j), terms, p))); },
      py::arg("j"), py::arg("p"), py::arg("terms") = 10);

  m.def(
      "iterate",
      [](const std::string& series, long p, const py::handle& seed, int steps, int precision) {
        auto u = TruncatedSeries::parse(series, p);
        return to_py(to_json(iterate(u, make_padic(seed, p, precision), steps)));
      },
      py::arg("series"), py::arg("p"), py::arg("seed"), py::arg("steps") = 4, py::arg("precision") = 20);

  m.def(
      "embed",
      [](const PadicNumber& x, int depth) {
        Vec2 q = embed(x, EmbedConfig{x.prime(), depth, 0.0});
        return py::make_tuple(q.x, q.y);
      },
      py::arg("x"), py::arg("depth") = 8);

  m.def(
      "recover",
      [](const py::sequence& a, bool signed_mode) {
        std::vector<Rational> v;
        for (auto c : a) v.push_back(to_rational(c));
        auto tbl = character_table(v);
        py::dict d;
        d["p_star"] = tbl.p_star;
        d["coefficients"] = fractions(recovered_coefficients(tbl, signed_mode ? SignMode::restored : SignMode::magnitude));
        return d;
      },
      py::arg("a"), py::arg("signed") = false);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI subcommand in process; returns (exit code, stdout, stderr).");
}
