#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ostrowski/cli.hpp"
#include "ostrowski/golden_mul.hpp"
#include "ostrowski/ostrowski_int.hpp"
#include "ostrowski/ostrowski_real.hpp"
#include "ostrowski/verify.hpp"

namespace py = pybind11;
using namespace ostrowski;

// mpz_class <-> Python int through decimal text.
namespace pybind11::detail {
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    return value.set_str(py::str(src).cast<std::string>(), 10) == 0;
  }
  static handle cast(const Integer& n, return_value_policy, handle) {
    return py::int_(py::str(n.get_str())).release();
  }
};

// The library hands out shared_ptr<const System>; Python holds shared_ptr<System>.
template <>
struct type_caster<SystemPtr> {
  using Holder = copyable_holder_caster<System, std::shared_ptr<System>>;
  PYBIND11_TYPE_CASTER(SystemPtr, const_name("System"));

  bool load(handle src, bool convert) {
    Holder h;
    if (!h.load(src, convert)) return false;
    value = static_cast<std::shared_ptr<System>&>(h);
    return true;
  }
  static handle cast(const SystemPtr& p, return_value_policy policy, handle parent) {
    return Holder::cast(std::const_pointer_cast<System>(p), policy, parent);
  }
};
}  // namespace pybind11::detail

namespace {

int order(std::strong_ordering c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ostrowski numeration for quadratic irrationals";

  py::register_exception<Error>(m, "OstrowskiError", PyExc_ValueError);

  py::class_<QuadraticNumber>(m, "QuadraticNumber")
      .def(py::init<>())
      .def(py::init<const Integer&>())
      .def(py::init<Integer, Integer, Integer, Integer>(), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("d"))
      .def_static("parse", &QuadraticNumber::parse)
      .def_static("sqrt", &QuadraticNumber::sqrt)
      .def_property_readonly("p", &QuadraticNumber::p)
      .def_property_readonly("q", &QuadraticNumber::q)
      .def_property_readonly("r", &QuadraticNumber::r)
      .def_property_readonly("d", &QuadraticNumber::d)
      .def("sign", &QuadraticNumber::sign)
      .def("floor", &QuadraticNumber::floor)
      .def("conjugate", &QuadraticNumber::conjugate)
      .def("__float__", &QuadraticNumber::approx)
      .def("__str__", &QuadraticNumber::to_string)
      .def("__repr__", [](const QuadraticNumber& x) { return "QuadraticNumber('" + x.to_string() + "')"; })
      .def("__hash__", [](const QuadraticNumber& x) { return std::hash<std::string>{}(x.to_string()); })
      .def("__eq__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return x == y; })
      .def("__lt__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return x < y; })
      .def("__le__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return compare(x, y) <= 0; })
      .def("__add__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return x + y; })
      .def("__sub__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return x - y; })
      .def("__mul__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return x * y; })
      .def("__truediv__", [](const QuadraticNumber& x, const QuadraticNumber& y) { return x / y; })
      .def("__neg__", [](const QuadraticNumber& x) { return -x; });

  py::class_<System, std::shared_ptr<System>>(m, "System")
      .def_static("from_spec", &System::from_spec, py::arg("spec"))
      .def_property_readonly("alpha", &System::alpha)
      .def_property_readonly("name", &System::name)
      .def_property_readonly("mu", &System::mu)
      .def("cf", [](const System& s) { return s.cf().to_string(); })
      .def("partial_quotient", &System::partial_quotient)
      .def("p", &System::p)
      .def("q", &System::q)
      .def("beta", &System::beta)
      .def("is_golden", &System::is_golden);

  py::class_<OstrowskiInt>(m, "OstrowskiInt")
      .def_static("parse", &OstrowskiInt::parse)
      .def_property_readonly("digits", &OstrowskiInt::digits)
      .def_property_readonly("system", &OstrowskiInt::system)
      .def("word", &OstrowskiInt::word)
      .def("__int__", [](const OstrowskiInt& x) { return ost_decode(x); })
      .def("__str__", &OstrowskiInt::word)
      .def("__eq__", [](const OstrowskiInt& x, const OstrowskiInt& y) { return x == y; });

  py::class_<DigitSeq>(m, "DigitSeq")
      .def(py::init<SystemPtr, std::vector<Digit>, std::vector<Digit>>(), py::arg("system"), py::arg("preamble"),
           py::arg("cycle") = std::vector<Digit>{})
      .def_property_readonly("preamble", &DigitSeq::preamble)
      .def_property_readonly("cycle", &DigitSeq::cycle)
      .def_property_readonly("approximate", &DigitSeq::approximate)
      .def("digit", &DigitSeq::digit)
      .def("__str__", &DigitSeq::to_string)
      .def("__eq__", [](const DigitSeq& x, const DigitSeq& y) { return x == y; });

  m.def("encode", &ost_encode, py::arg("n"), py::arg("system"));
  m.def("decode", py::overload_cast<const OstrowskiInt&>(&ost_decode));
  m.def("validate", [](const SystemPtr& s, const std::vector<Digit>& d) { return ost_validate(*s, d); });
  m.def("cmp", [](const OstrowskiInt& x, const OstrowskiInt& y) { return order(ost_cmp(x, y)); });
  m.def(
      "add",
      [](const OstrowskiInt& x, const OstrowskiInt& y, const std::string& engine) {
        if (engine != "reference" && engine != "digit") throw py::value_error("engine must be reference or digit");
        return ost_add(x, y, engine == "digit" ? AddEngine::Digit : AddEngine::Reference);
      },
      py::arg("x"), py::arg("y"), py::arg("engine") = "reference");
  m.def("succ", &ost_succ);

  m.def("real_encode", &real_encode, py::arg("c"), py::arg("system"), py::arg("depth") = 64);
  m.def("real_decode", &real_decode);
  m.def("real_cmp", [](const DigitSeq& x, const DigitSeq& y) { return order(real_cmp(x, y)); });
  m.def("neg_beta_digits", &neg_beta_digits);
  m.def("f_map", [](const Integer& n, const SystemPtr& s) {
    const FMapResult f = f_map(n, s);
    return py::make_tuple(f.value, f.m, f.digits);
  });

  m.def("mul_phi", [](const Integer& a, const Integer& n) { return mul_phi(a, n, GoldenContext()); });

  m.def(
      "verify_all",
      [](const SystemPtr& s, std::size_t bound) {
        VerifyOptions opt;
        opt.bound = bound;
        py::dict out;
        for (const Report& r : verify_all(s, opt)) {
          for (const Check& c : r.checks) out[py::str(c.name)] = c.ok;
        }
        return out;
      },
      py::arg("system"), py::arg("bound") = 2000);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
