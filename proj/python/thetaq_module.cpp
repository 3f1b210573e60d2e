#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetaq/catalog.hpp"
#include "thetaq/errors.hpp"
#include "thetaq/json_io.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/qseries.hpp"
#include "thetaq/recognize.hpp"
#include "thetaq/relation.hpp"

namespace py = pybind11;
using namespace thetaq;

namespace {

std::vector<Rational> parse_list(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::string text(const BigReal& x, int digits) { return x.with_digits(digits).to_string(); }

VerifyOptions options(int digits, const std::string& order, const std::vector<std::string>& rs, bool remine) {
  VerifyOptions o;
  o.digits = digits;
  o.order = parse_rational(order);
  o.rs = parse_list(rs);
  o.remine = remine;
  return o;
}

}  // namespace

PYBIND11_MODULE(_thetaq, m) {
  m.doc() = "Native core of the thetaq package; results cross as strings and JSON text.";

  static py::exception<NotFound> not_found(m, "NotFoundError", PyExc_LookupError);
  static py::exception<ValidationFailed> validation(m, "ValidationError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotFound& e) {
      py::set_error(not_found, e.what());
    } catch (const ValidationFailed& e) {
      py::set_error(validation, e.what());
    }
  });

  m.def("ellipk", [](const std::string& x, int digits) {
    return text(ellipk(BigReal(parse_rational(x), digits + kGuardDigits), digits), digits);
  }, py::arg("x"), py::arg("digits") = 60);

  m.def("singular_modulus", [](const std::string& r, int digits) {
    EvalPoint pt = singular_modulus(parse_rational(r), digits);
    return std::map<std::string, std::string>{
        {"q", pt.q.to_string()}, {"k", pt.k.to_string()}, {"kprime", pt.kprime.to_string()}};
  }, py::arg("r"), py::arg("digits") = 60);

  m.def("eval_A", [](const std::string& a, const std::string& p, const std::string& r, int digits) {
    const int work = digits + kGuardDigits;
    BigReal q = singular_modulus(parse_rational(r), work).q;
    return text(eval_A(ThetaSpec(parse_rational(a), parse_rational(p)), q, work), digits);
  }, py::arg("a"), py::arg("p"), py::arg("r"), py::arg("digits") = 60);

  m.def("series_json", [](const std::string& fn, const std::string& order, const std::string& a,
                          const std::string& p, const std::string& b, const std::string& scale) {
    const Rational o = parse_rational(order);
    PuiseuxSeries s;
    if (fn == "eta") s = eta_series(parse_rational(scale), o);
    else if (fn == "theta") s = theta_series(parse_rational(a), parse_rational(b), o);
    else if (fn == "m") s = modulus_series(o);
    else if (fn == "A") s = A_series(ThetaSpec(parse_rational(a), parse_rational(p)), o);
    else if (fn == "h5") s = h5_series(o);
    else if (fn == "eta5") s = eta5_series(o);
    else throw DomainError("unknown series '" + fn + "'");
    return to_json(s).dump();
  }, py::arg("fn"), py::arg("order"), py::arg("a") = "1", py::arg("p") = "4", py::arg("b") = "0",
     py::arg("scale") = "1");

  m.def("mine_json", [](const std::string& a, const std::string& p, int power, const std::string& v,
                        int max_degree, const std::string& order, int digits, int nome_power) {
    UBinding ub{ThetaSpec(parse_rational(a), parse_rational(p)), power, nome_power};
    ValidationPlan plan;
    plan.digits = digits;
    py::gil_scoped_release release;
    return to_json(mine(ub, parse_vbinding(v), max_degree, parse_rational(order), plan)).dump();
  }, py::arg("a"), py::arg("p"), py::arg("power"), py::arg("v"), py::arg("max_degree"),
     py::arg("order"), py::arg("digits") = 60, py::arg("nome_power") = 1);

  m.def("recognize", [](const std::string& value, int max_degree, int digits) {
    IntPoly poly = recognize(BigReal(value, 2 * digits), max_degree, digits);
    std::vector<std::string> out;
    for (const auto& c : poly.coeffs()) out.push_back(c.get_str());
    return out;
  }, py::arg("value"), py::arg("max_degree"), py::arg("digits") = 60);

  m.def("recognize_rational", [](const std::string& value, int digits, const std::string& den_bound) {
    return to_string(recognize_rational(BigReal(value, digits), digits, BigInt(den_bound)));
  }, py::arg("value"), py::arg("digits") = 60, py::arg("den_bound") = "1000000");

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.id);
    return ids;
  });

  m.def("verify_entry_json", [](const std::string& id, int digits, const std::string& order,
                                const std::vector<std::string>& rs, bool remine) {
    VerifyOptions o = options(digits, order, rs, remine);
    py::gil_scoped_release release;
    return to_json(verify_entry(id, o)).dump();
  }, py::arg("id"), py::arg("digits") = 60, py::arg("order") = "150",
     py::arg("rs") = std::vector<std::string>{"1", "2", "3"}, py::arg("remine") = true);

  m.def("verify_all_json", [](int digits, const std::string& order, const std::vector<std::string>& rs,
                              bool remine) {
    VerifyOptions o = options(digits, order, rs, remine);
    py::gil_scoped_release release;
    return to_json(verify_all(o)).dump();
  }, py::arg("digits") = 60, py::arg("order") = "150",
     py::arg("rs") = std::vector<std::string>{"1", "2", "3"}, py::arg("remine") = true);
}
