#include <doctest.h>

#include <chrono>

#include "thetaq/errors.hpp"
#include "thetaq/relation.hpp"

using namespace thetaq;

namespace {

std::vector<Rational> row(std::initializer_list<long> xs) {
  std::vector<Rational> r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

bool same_up_to_sign(const IntVector& a, std::initializer_list<long> b) {
  if (a.size() != b.size()) return false;
  int sign = 0;
  std::size_t i = 0;
  for (long x : b) {
    if (a[i] == x && a[i] != 0) sign = sign == -1 ? 2 : 1;
    if (a[i] == -x && a[i] != 0) sign = sign == 1 ? 2 : -1;
    if (abs(a[i]) != std::abs(x)) return false;
    ++i;
  }
  return sign == 1 || sign == -1;
}

}  // namespace

TEST_CASE("nullspace of small matrices") {
  auto k = exact_nullspace({row({1, 2}), row({2, 4})});
  REQUIRE(k.size() == 1);
  CHECK(same_up_to_sign(k[0], {2, -1}));

  CHECK(exact_nullspace({row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}).empty());

  k = exact_nullspace({row({1, 1})});
  REQUIRE(k.size() == 1);
  CHECK(same_up_to_sign(k[0], {1, -1}));

  // Rational entries and a rank-deficient middle column.
  std::vector<std::vector<Rational>> m{{Rational(1, 2), 0, Rational(1, 3)}, {1, 0, Rational(2, 3)}};
  k = exact_nullspace(m);
  CHECK(k.size() == 2);
  for (const auto& v : k) {
    for (const auto& r : m) {
      Rational s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += r[j] * Rational(v[j]);
      CHECK(s == 0);
    }
  }
  CHECK(modular_rank(m) == 1);
}

TEST_CASE("coefficient matrix bookkeeping") {
  auto one = PuiseuxSeries::constant(1);
  auto cm = build_coeff_matrix(one, one, 1, 1);
  CHECK(cm.columns.size() == 4);
  REQUIRE(cm.rows.size() == 1);
  CHECK(cm.row_exponents[0] == 0);
  for (const auto& x : cm.rows[0]) CHECK(x == 1);

  // u with a negative exponent: rows start at the lowest exponent of u^s.
  PuiseuxSeries u(1, {{-1, 1}, {0, 1}}, 30);
  auto v = modulus_series(30);
  cm = build_coeff_matrix(u, v, 2, 5);
  CHECK(cm.row_exponents.front() == -2);

  // Truncation too early names the order.
  auto short_v = modulus_series(5);
  CHECK_THROWS_AS(build_coeff_matrix(u, short_v, 2, 40), DomainError);
}

TEST_CASE("the (1,4) relation appears at s = 2") {
  UBinding ub{ThetaSpec(1, 4), 12, 1};
  auto u = u_series(ub, 60);
  auto v = v_series(VBinding::m, 60);
  auto cm = build_coeff_matrix(u, v, 1, 14);
  CHECK(exact_nullspace(cm.rows).empty());

  cm = build_coeff_matrix(u, v, 2, 9);
  CHECK(exact_nullspace(cm.rows).size() == 1);

  auto rel = mine(ub, VBinding::m, 2, 40);
  CHECK(rel.degree == 2);
  // u^2 v = 16 (1 - v)^2
  CHECK(rel.poly == BivarIntPoly{{2, 1, -1}, {0, 2, 16}, {0, 1, -32}, {0, 0, 16}});
  CHECK(rel.validated_order >= rel.matrix_order + 25);
  REQUIRE(rel.numeric_checks.size() == 2);
  for (const auto& c : rel.numeric_checks) CHECK(c.residual < c.tolerance);

  // Re-validation succeeds; a perturbed coefficient is caught by the series check.
  CHECK_NOTHROW(validate(rel, 25, {Rational(1), Rational(2)}, 60));
  MinedRelation bad = rel;
  bad.poly = BivarIntPoly{{2, 1, -1}, {0, 2, 16}, {0, 1, -31}, {0, 0, 16}};
  CHECK_THROWS_AS(validate(bad, 25, {Rational(1)}, 60), ValidationFailed);

  // Stability under a longer truncation.
  CHECK(mine(ub, VBinding::m, 2, 80).poly == rel.poly);
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(BivarIntPoly(BivarIntPoly::Terms{}), DomainError);
  CHECK_THROWS_AS((BivarIntPoly{{1, 1, 0}}), DomainError);
}

TEST_CASE("printed relation for A(-2,8)^12 against m(q^2)^2") {
  UBinding ub{ThetaSpec(-2, 8), 12, 1};
  BivarIntPoly printed{{4, 1, -1}, {2, 1, -64}, {0, 2, 256}, {0, 1, -512}, {0, 0, 256}};
  CHECK(relation_residual_series(printed, ub, VBinding::m_q2_squared, 80).is_zero());
  MinedRelation rel{ub, VBinding::m_q2_squared, printed, 4, Rational(80), Rational(80), {}};
  rel = validate(rel, 25, {Rational(1), Rational(2)}, 60);
  for (const auto& c : rel.numeric_checks) CHECK(c.residual < pow10(-40, 60));

  auto mined = mine(ub, VBinding::m_q2_squared, 4, 60);
  CHECK(mined.poly == printed);
}

TEST_CASE("printed relation for A(-1,6)^6 against k") {
  UBinding ub{ThetaSpec(-1, 6), 6, 1};
  BivarIntPoly printed{{4, 3, 1}, {4, 1, -1}, {3, 2, 16}, {2, 3, -18}, {2, 1, 18},
                       {1, 4, 4},  {1, 2, -8}, {1, 0, 4},  {0, 3, 1},   {0, 1, -1}};
  CHECK(relation_residual_series(printed, ub, VBinding::sqrt_m, 80).is_zero());
  auto mined = mine(ub, VBinding::sqrt_m, 4, 60);
  CHECK(mined.poly == printed);
}

TEST_CASE("corrected relation for A(8,6)^6 against k") {
  UBinding ub{ThetaSpec(8, 6), 6, 1};
  BivarIntPoly expected{{0, 2, 19683}, {0, 4, -19683}, {2, 2, 486}, {2, 4, -486}, {3, 0, 16},
                        {3, 2, -24},   {3, 4, -24},    {3, 6, 16},  {4, 2, -1},   {4, 4, 1}};
  auto t0 = std::chrono::steady_clock::now();
  auto mined = mine(ub, VBinding::sqrt_m, 6, 75);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("s=6 mine took " << secs << " s");
  CHECK(mined.degree == 6);
  CHECK(mined.poly == expected);
}

TEST_CASE("scaling u rescales the mined polynomial") {
  // u' = 2u: P'(u', v) = P(u'/2, v).
  UBinding ub{ThetaSpec(1, 4), 12, 1};
  auto u = u_series(ub, 60);
  auto v = v_series(VBinding::m, 60);
  auto plain = find_relation(u, v, 2);
  auto scaled = find_relation(u * Rational(2), v, 2);
  REQUIRE(plain.poly);
  REQUIRE(scaled.poly);
  CHECK(*scaled.poly == plain.poly->substitute_u_scale(2));
}

TEST_CASE("no relation reports the rank profile") {
  UBinding ub{ThetaSpec(1, 5), 1, 1};
  try {
    mine(ub, VBinding::m, 1, 30);
    FAIL("expected NotFound");
  } catch (const NotFound& e) {
    CHECK(std::string(e.what()).find("rank") != std::string::npos);
  }
}
