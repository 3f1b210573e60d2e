#include <doctest.h>

#include "thetaq/errors.hpp"
#include "thetaq/json_io.hpp"
#include "thetaq/qseries.hpp"

using namespace thetaq;

TEST_CASE("series JSON round trip") {
  for (const auto& s : {modulus_series(40), A_series(ThetaSpec(8, 6), 30), eta5_series(12),
                        PuiseuxSeries::monomial(Rational(-3, 7), Rational(5, 2))}) {
    Json j = to_json(s);
    CHECK(series_from_json(Json::parse(dump(j))) == s);
  }
  CHECK(to_json(PuiseuxSeries::constant(1))["hi"].is_null());
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"denom": 1})")), DomainError);
}

TEST_CASE("relation JSON round trip and determinism") {
  UBinding ub{ThetaSpec(-2, 8), 12, 1};
  MinedRelation rel = mine(ub, VBinding::m_q2_squared, 4, 60);
  const std::string text = dump(to_json(rel));
  CHECK(text == dump(to_json(mine(ub, VBinding::m_q2_squared, 4, 60))));
  MinedRelation back = relation_from_json(Json::parse(text));
  CHECK(back.poly == rel.poly);
  CHECK(back.u.spec == rel.u.spec);
  CHECK(back.v == rel.v);
  CHECK(back.validated_order == rel.validated_order);
  CHECK(back.numeric_checks.size() == rel.numeric_checks.size());
  Json j = Json::parse(text);
  CHECK(j["u"]["a"] == "-2");
  CHECK(j["v"] == "m_q2_squared");
}

TEST_CASE("report JSON layout") {
  VerifyOptions o;
  o.rs = {Rational(1), Rational(2)};
  Report r{o, {verify_entry("table4", o)}};
  Json j = to_json(r);
  CHECK(j["run"]["digits"] == 60);
  CHECK(j["run"]["rs"] == Json::array({"1", "2"}));
  CHECK(j["entries"][0]["verdict"] == "pass");
  CHECK(j["entries"][0]["remined"].is_null());
  CHECK(j["entries"][0]["residuals"][0]["r"] == "1");
}
