#include "thetaq/json_io.hpp"

#include <fstream>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

Rational parse_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational string, got " + j.dump());
}

Json binding_json(const UBinding& u) {
  Json j = {{"a", to_string(u.spec.a())}, {"p", to_string(u.spec.p())}, {"power", u.power}};
  if (u.nome_power != 1) j["nome_power"] = u.nome_power;
  return j;
}

}  // namespace

Json to_json(const PuiseuxSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back({k, to_string(c)});
  Json j = {{"denom", s.denom()}, {"terms", terms}};
  j["hi"] = s.is_exact() ? Json(nullptr) : Json(s.hi());
  return j;
}

PuiseuxSeries series_from_json(const Json& j) {
  try {
    PuiseuxSeries::Terms terms;
    for (const auto& t : j.at("terms")) terms[t.at(0).get<PuiseuxSeries::Index>()] = parse_field(t.at(1));
    const auto& hi = j.at("hi");
    return PuiseuxSeries(j.at("denom").get<PuiseuxSeries::Index>(), std::move(terms),
                         hi.is_null() ? PuiseuxSeries::kExact : hi.get<PuiseuxSeries::Index>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const MinedRelation& rel) {
  Json poly = Json::array();
  for (const auto& [m, c] : rel.poly.terms()) poly.push_back({m.first, m.second, c.get_str()});
  Json checks = Json::array();
  for (const auto& c : rel.numeric_checks) {
    checks.push_back({{"r", to_string(c.r)}, {"digits", c.digits}, {"residual", c.residual.to_sci()},
                      {"tolerance", c.tolerance.to_sci()}});
  }
  return {{"u", binding_json(rel.u)},
          {"v", to_string(rel.v)},
          {"poly", poly},
          {"polynomial", rel.poly.to_string()},
          {"degree", rel.degree},
          {"matrix_order", to_string(rel.matrix_order)},
          {"validated_grid_order", to_string(rel.validated_order)},
          {"numeric_checks", checks}};
}

MinedRelation relation_from_json(const Json& j) {
  try {
    const Json& u = j.at("u");
    UBinding ub{ThetaSpec(parse_field(u.at("a")), parse_field(u.at("p"))), u.at("power").get<int>(),
                u.value("nome_power", 1)};
    BivarIntPoly::Terms terms;
    for (const auto& t : j.at("poly")) {
      terms[{t.at(0).get<int>(), t.at(1).get<int>()}] = BigInt(t.at(2).get<std::string>());
    }
    MinedRelation rel{ub, parse_vbinding(j.at("v").get<std::string>()), BivarIntPoly(std::move(terms)),
                      j.value("degree", 0), Rational(0), parse_field(j.at("validated_grid_order")), {}};
    rel.matrix_order = j.contains("matrix_order") ? parse_field(j.at("matrix_order")) : rel.validated_order;
    for (const auto& c : j.value("numeric_checks", Json::array())) {
      const int d = c.at("digits").get<int>();
      rel.numeric_checks.push_back(NumericCheck{parse_field(c.at("r")), d,
                                                BigReal(c.at("residual").get<std::string>(), d),
                                                BigReal(c.value("tolerance", "0"), d)});
    }
    return rel;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed relation JSON: ") + e.what());
  }
}

Json to_json(const IntPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.get_str());
  return j;
}

Json to_json(const EntryReport& e) {
  Json res = Json::array();
  for (const auto& p : e.residuals) {
    res.push_back({{p.variable, p.point}, {"digits", p.digits}, {"residual", p.residual.to_sci()},
                   {"tolerance", p.tolerance.to_sci()}});
  }
  Json j = {{"id", e.id},
            {"kind", to_string(e.kind)},
            {"expectation", to_string(e.expectation)},
            {"verdict", to_string(e.verdict)},
            {"residuals", res},
            {"notes", e.notes}};
  j["series_order"] = e.series_order ? Json(to_string(*e.series_order)) : Json(nullptr);
  if (e.series_order) {
    j["series_zero"] = e.series_zero;
    j["series_failure_at"] = e.series_failure_at ? Json(to_string(*e.series_failure_at)) : Json(nullptr);
  }
  j["remined"] = e.remined ? to_json(*e.remined) : Json(nullptr);
  return j;
}

Json to_json(const Report& r) {
  Json rs = Json::array();
  for (const auto& x : r.run.rs) rs.push_back(to_string(x));
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"run", {{"digits", r.run.digits}, {"order", to_string(r.run.order)}, {"rs", rs}}},
          {"entries", entries}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << dump(j);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace thetaq
