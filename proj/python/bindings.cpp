#include "signfree/commands.hpp"
#include "signfree/expr.hpp"
#include "signfree/properties.hpp"
#include "signfree/units.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace signfree;

namespace {

// Accepts Scalar, int, fractions.Fraction or a scalar expression string.
ExactScalar to_scalar(const py::handle& h) {
  if (py::isinstance<ExactScalar>(h)) return h.cast<ExactScalar>();
  if (py::isinstance<py::bool_>(h)) throw py::type_error("bool is not a scalar");
  if (py::isinstance<py::int_>(h) || py::hasattr(h, "denominator")) {
    return Rational::parse(py::str(h).cast<std::string>());
  }
  if (py::isinstance<py::str>(h)) {
    const expr::Value v = expr::evaluate(expr::parse(h.cast<std::string>()));
    if (const auto* s = std::get_if<ExactScalar>(&v)) return *s;
    throw py::type_error("expression does not denote a scalar");
  }
  throw py::type_error("expected Scalar, int, Fraction or str");
}

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

std::array<std::array<ExactScalar, 3>, 3> to_rows(const py::sequence& rows) {
  if (py::len(rows) != 3) throw py::value_error("expected 3 rows");
  std::array<std::array<ExactScalar, 3>, 3> out{};
  for (std::size_t r = 0; r < 3; ++r) {
    const auto row = rows[r].cast<py::sequence>();
    if (py::len(row) != 3) throw py::value_error("expected 3 entries per row");
    for (std::size_t s = 0; s < 3; ++s) out[r][s] = to_scalar(row[s]);
  }
  return out;
}

template <class Fn>
std::string captured(Fn fn, int& status) {
  std::ostringstream out;
  status = fn(out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_signfree, m) {
  m.doc() = "Sign-free number systems: unsigned pairs, cyclic triples and 3x3 cyclic matrices";

  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<NegativeValue>(m, "NegativeValue", PyExc_ValueError);
  py::register_exception<expr::ParseError>(m, "ParseError", PyExc_SyntaxError);
  py::register_exception<expr::EvalError>(m, "EvalError", PyExc_ValueError);

  py::class_<ExactScalar>(m, "Scalar")
      .def(py::init([](const py::object& v) { return to_scalar(v); }), py::arg("value") = 0)
      .def(py::init([](const py::object& q, const py::object& r) {
             return ExactScalar(to_scalar(q).rational_part(), to_scalar(r).rational_part());
           }),
           py::arg("rational"), py::arg("root"))
      .def_static("sqrt3", &ExactScalar::sqrt3)
      .def_property_readonly("rational_part", [](const ExactScalar& s) { return to_fraction(s.rational_part()); })
      .def_property_readonly("root_part", [](const ExactScalar& s) { return to_fraction(s.root_part()); })
      .def("sign", &ExactScalar::sign)
      .def("conjugate", &ExactScalar::conjugate)
      .def("__float__", &ExactScalar::to_double)
      .def("__bool__", [](const ExactScalar& s) { return !s.is_zero(); })
      .def("__neg__", [](const ExactScalar& s) { return -s; })
      .def("__add__", [](const ExactScalar& a, const py::object& b) { return a + to_scalar(b); })
      .def("__radd__", [](const ExactScalar& a, const py::object& b) { return to_scalar(b) + a; })
      .def("__sub__", [](const ExactScalar& a, const py::object& b) { return a - to_scalar(b); })
      .def("__rsub__", [](const ExactScalar& a, const py::object& b) { return to_scalar(b) - a; })
      .def("__mul__", [](const ExactScalar& a, const py::object& b) { return a * to_scalar(b); })
      .def("__rmul__", [](const ExactScalar& a, const py::object& b) { return to_scalar(b) * a; })
      .def("__truediv__", [](const ExactScalar& a, const py::object& b) { return a / to_scalar(b); })
      .def("__rtruediv__", [](const ExactScalar& a, const py::object& b) { return to_scalar(b) / a; })
      .def("__pow__", [](const ExactScalar& a, unsigned n) { return pow(a, n); })
      .def("__eq__", [](const ExactScalar& a, const py::object& b) { return a == to_scalar(b); })
      .def("__lt__", [](const ExactScalar& a, const py::object& b) { return a < to_scalar(b); })
      .def("__le__", [](const ExactScalar& a, const py::object& b) { return a <= to_scalar(b); })
      .def("__gt__", [](const ExactScalar& a, const py::object& b) { return a > to_scalar(b); })
      .def("__ge__", [](const ExactScalar& a, const py::object& b) { return a >= to_scalar(b); })
      .def("__hash__", [](const ExactScalar& s) { return py::hash(py::str(s.to_string())); })
      .def("__str__", &ExactScalar::to_string)
      .def("__repr__", [](const ExactScalar& s) { return "Scalar('" + s.to_string() + "')"; });

  py::class_<UPair>(m, "Pair")
      .def(py::init([](const py::object& p, const py::object& q) { return UPair(to_scalar(p), to_scalar(q)); }),
           py::arg("plus") = 0, py::arg("minus") = 0)
      .def_property_readonly("plus", &UPair::plus)
      .def_property_readonly("minus", &UPair::minus)
      .def("is_reduced", &UPair::is_reduced)
      .def("reduce", [](const UPair& x) { return reduce(x); })
      .def("equivalent", [](const UPair& x, const UPair& y) { return equivalent(x, y); })
      .def("to_signed", &pair_to_signed)
      .def_static("from_signed", [](const py::object& v) { return pair_from_signed(to_scalar(v)); })
      .def("scale", [](const UPair& x, const py::object& s) { return scale(to_scalar(s), x); })
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &UPair::to_string)
      .def("__repr__", [](const UPair& x) { return "Pair('" + x.to_string() + "')"; });

  py::class_<Triple>(m, "Triple")
      .def(py::init([](const py::object& a, const py::object& b, const py::object& c) {
             return Triple(to_scalar(a), to_scalar(b), to_scalar(c));
           }),
           py::arg("a") = 0, py::arg("b") = 0, py::arg("c") = 0)
      .def_static("from_complex", [](ComplexValue z) { return complex_to_triple(z); })
      .def_property_readonly("a", &Triple::a)
      .def_property_readonly("b", &Triple::b)
      .def_property_readonly("c", &Triple::c)
      .def("__getitem__", [](const Triple& t, std::size_t i) {
        if (i > 2) throw py::index_error();
        return t[i];
      })
      .def("__len__", [](const Triple&) { return 3; })
      .def("is_reduced", &Triple::is_reduced)
      .def("reduce", [](const Triple& x) { return reduce(x); })
      .def("equivalent", [](const Triple& x, const Triple& y) { return equivalent(x, y); })
      .def("norm_sq", [](const Triple& x) { return norm_sq(x); })
      .def("norm", [](const Triple& x) { return norm(x); })
      .def("conj", [](const Triple& x) { return conj(x); })
      .def("to_complex", [](const Triple& x) { return to_complex(x); })
      .def("scale", [](const Triple& x, const py::object& s) { return scale(to_scalar(s), x); })
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__complex__", [](const Triple& x) { return to_complex(x); })
      .def("__str__", &Triple::to_string)
      .def("__repr__", [](const Triple& x) { return "Triple('" + x.to_string() + "')"; });

  py::class_<RowSelector>(m, "RowSelector")
      .def(py::init([](const std::string& cols) {
             if (cols.size() != 3) throw py::value_error("expected three column letters, e.g. 'ABC'");
             RowSelector sel;
             for (std::size_t r = 0; r < 3; ++r) {
               if (cols[r] < 'A' || cols[r] > 'C') throw py::value_error("column letters are A, B, C");
               sel.choice[r] = static_cast<Col>(cols[r] - 'A');
             }
             return sel;
           }),
           py::arg("columns") = "ABC")
      .def_static("all", &RowSelector::all)
      .def("__eq__", [](const RowSelector& a, const RowSelector& b) { return a == b; })
      .def("__str__", &RowSelector::to_string)
      .def("__repr__", [](const RowSelector& s) { return "RowSelector(" + s.to_string() + ")"; });

  py::class_<Mat33>(m, "Matrix")
      .def(py::init([](const py::sequence& rows) { return Mat33::from_rows(to_rows(rows)); }), py::arg("rows"))
      .def(py::init<>())
      .def("column", [](const Mat33& x, std::size_t s) {
        if (s > 2) throw py::index_error();
        return x.column(s);
      })
      .def("entry", [](const Mat33& x, std::size_t r, std::size_t s) {
        if (r > 2 || s > 2) throw py::index_error();
        return x.entry(r, s);
      })
      .def("rows", [](const Mat33& x) {
        std::array<std::array<ExactScalar, 3>, 3> out{};
        for (std::size_t r = 0; r < 3; ++r) {
          for (std::size_t s = 0; s < 3; ++s) out[r][s] = x.entry(r, s);
        }
        return out;
      })
      .def("is_reduced", &Mat33::is_reduced)
      .def("reduce", [](const Mat33& x) { return reduce(x); })
      .def("equivalent", [](const Mat33& x, const Mat33& y) { return equivalent(x, y); })
      .def("row_sums", &row_sums)
      .def("norm_sq", [](const Mat33& x) { return norm_sq(x); })
      .def("norm", [](const Mat33& x) { return norm(x); })
      .def("characters", &character_transform)
      .def("scale", [](const Mat33& x, const py::object& s) { return scale(to_scalar(s), x); })
      .def("__pow__", [](const Mat33& x, unsigned n) { return pow(x, n); })
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &Mat33::to_string)
      .def("__repr__", [](const Mat33& x) { return "Matrix('" + x.to_string() + "')"; });

  m.def("absolute_zero", [](const py::object& x, const py::object& y, const py::object& z) {
    return absolute_zero(to_scalar(x), to_scalar(y), to_scalar(z));
  });
  m.def("rotation_zero", [](const RowSelector& sel, const py::object& xi) { return rotation_zero(sel, to_scalar(xi)); },
        py::arg("selector"), py::arg("xi") = 1);

  m.def("unit_labels", [] {
    std::vector<std::string> out;
    for (UnitName u : all_units()) out.emplace_back(label(u));
    return out;
  });
  m.def("unit", [](const std::string& name) {
    auto u = unit_from_label(name);
    if (!u) u = unit_from_token(name);
    if (!u) throw py::key_error(name);
    return unit_value(*u);
  }, py::arg("name"), "Unit constant by label ('-j') or token ('NJJ').");
  m.def("identify_unit", [](const Mat33& x) -> std::optional<std::string> {
    auto u = identify_unit(x);
    if (!u) return std::nullopt;
    return std::string(label(*u));
  });

  m.def("evaluate", [](const std::string& text) { return expr::evaluate(expr::parse(text)); }, py::arg("expression"));
  m.def("evaluate_text", &expr::evaluate_text, py::arg("expression"));

  m.def("verify_tables", [] {
    py::dict out;
    for (UnitTable t : all_tables()) {
      const TableReport r = verify_unit_table(t);
      out[py::str(std::string(table_id(t)))] = py::make_tuple(r.passed(), r.cells.size());
    }
    return out;
  });
  m.def("run_properties", [](std::size_t samples, std::uint64_t seed) {
    py::list out;
    for (const PropertyResult& r : run_properties({.samples = samples, .seed = seed})) {
      py::dict d;
      d["name"] = r.name;
      d["cases"] = r.cases;
      d["failures"] = r.failures;
      d["first_failure"] = r.first_failure;
      out.append(d);
    }
    return out;
  }, py::arg("samples") = 1000, py::arg("seed") = 42);
  m.def("roots_report", [] {
    int status = 0;
    std::string text = captured([](std::ostream& o) { return commands::roots(o, true); }, status);
    return py::make_tuple(status, text);
  });
}
