#include <doctest.h>

#include <random>
#include <vector>

#include "thetaq/errors.hpp"
#include "thetaq/series.hpp"

using namespace thetaq;

namespace {

PuiseuxSeries poly(std::initializer_list<std::pair<long, long>> terms, long hi = PuiseuxSeries::kExact,
                   long denom = 1) {
  PuiseuxSeries::Terms t;
  for (auto [k, c] : terms) t.emplace(k, Rational(c));
  return PuiseuxSeries(denom, std::move(t), hi);
}

// Random series on grid `denom` with small rational coefficients.
PuiseuxSeries random_series(std::mt19937& rng, long denom, long lo, long hi, bool unit) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  PuiseuxSeries::Terms t;
  for (long k = lo; k < hi; ++k) {
    int c = coef(rng);
    if (unit && k == lo && c == 0) c = 1;
    if (c != 0) t.emplace(k, Rational(c, den(rng)));
  }
  return PuiseuxSeries(denom, std::move(t), hi);
}

}  // namespace

TEST_CASE("difference of squares and grid normalization") {
  auto a = poly({{0, 1}, {1, 1}});
  auto b = poly({{0, 1}, {1, -1}});
  CHECK(a * b == poly({{0, 1}, {2, -1}}));

  auto half = PuiseuxSeries::monomial(1, Rational(1, 2));
  CHECK(half.denom() == 2);
  auto q = half * half;
  CHECK(q.denom() == 1);
  CHECK(q == PuiseuxSeries::monomial(1, 1));
}

TEST_CASE("truncation bookkeeping of products") {
  // (1 + q + O(q^3)) * (q^-1 + O(q^2)) is known below q^2.
  auto u = poly({{0, 1}, {1, 1}}, 3);
  auto v = poly({{-1, 1}}, 2);
  auto w = u * v;
  CHECK(w.order() == 2);
  CHECK(w.coefficient(-1) == 1);
  CHECK(w.coefficient(0) == 1);
  CHECK_THROWS_AS(w.coefficient(2), DomainError);
}

TEST_CASE("normalization never claims unknown coefficients") {
  // Known below q^{3/2}; collapsing the grid to N=1 would claim q^{3/2} = 0.
  auto u = poly({{0, 1}, {2, 1}}, 3, 2);
  CHECK(u.denom() == 2);
  CHECK(u.order() == Rational(3, 2));
}

TEST_CASE("invert_unit") {
  auto geo = invert_unit(poly({{0, 1}, {1, -1}}, 10));
  for (long k = 0; k < 10; ++k) CHECK(geo.coefficient(k) == 1);
  CHECK(geo.order() == 10);

  auto mono = invert_unit(poly({{1, 2}}));
  CHECK(mono == PuiseuxSeries::monomial(Rational(1, 2), -1));

  CHECK_THROWS_AS(invert_unit(poly({}, 5)), DomainError);
  CHECK_THROWS_AS(invert_unit(poly({{0, 1}, {1, 1}})), DomainError);  // exact, not a monomial
  CHECK_THROWS_AS(pow(poly({}, 5), -1), DomainError);
}

TEST_CASE("invert_unit on a Puiseux leading exponent") {
  auto u = poly({{1, 3}, {2, 1}}, 9, 2);  // 3 q^{1/2} + q + O(q^{9/2})
  auto inv = invert_unit(u);
  CHECK(inv.leading_exponent() == Rational(-1, 2));
  auto one = u * inv;
  CHECK(equal_through(one, PuiseuxSeries::constant(1), one.order()));
  CHECK(one.order() == 4);
}

TEST_CASE("exp_series") {
  auto e = exp_series(poly({{1, 1}}, 4));
  CHECK(e.coefficient(0) == 1);
  CHECK(e.coefficient(1) == 1);
  CHECK(e.coefficient(2) == Rational(1, 2));
  CHECK(e.coefficient(3) == Rational(1, 6));
  CHECK(exp_series(PuiseuxSeries()) == PuiseuxSeries::constant(1));
  CHECK_THROWS_AS(exp_series(poly({{0, 1}, {1, 1}}, 4)), DomainError);
}

TEST_CASE("sqrt_series") {
  CHECK(sqrt_series(poly({{0, 1}, {1, 2}, {2, 1}})) == poly({{0, 1}, {1, 1}}));
  CHECK(sqrt_series(poly({{1, 16}})) == PuiseuxSeries::monomial(4, Rational(1, 2)));

  auto t = sqrt_series(poly({{0, 1}, {1, 2}, {2, 1}}, 20));
  CHECK(equal_through(t, poly({{0, 1}, {1, 1}}), 20));

  CHECK_THROWS_AS(sqrt_series(poly({{0, 2}, {1, 1}}, 5)), DomainError);
  CHECK_THROWS_AS(sqrt_series(poly({{0, 1}, {1, 1}})), DomainError);  // exact non-square
}

TEST_CASE("rescale") {
  CHECK(rescale(poly({{0, 1}, {1, -1}}), 2) == poly({{0, 1}, {2, -1}}));
  auto u = poly({{0, 1}, {1, -1}}, 6);
  auto v = rescale(u, Rational(1, 3));
  CHECK(v.order() == 2);
  CHECK(v.coefficient(Rational(1, 3)) == -1);
  CHECK_THROWS_AS(rescale(u, 0), DomainError);
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_series(rng, 2, -2, 14, false);
    auto b = random_series(rng, 3, 0, 20, false);
    auto c = random_series(rng, 1, -1, 8, false);
    auto lhs = (a * b) * c;
    auto rhs = a * (b * c);
    CHECK(lhs.order() == rhs.order());
    CHECK(equal_through(lhs, rhs, lhs.order()));

    auto d1 = a * (b + c);
    auto d2 = a * b + a * c;
    CHECK(equal_through(d1, d2, std::min(d1.order(), d2.order())));
    CHECK(equal_through(a + b, b + a, (a + b).order()));
  }
}

TEST_CASE("u * invert_unit(u) == 1 for random units") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_series(rng, 1 + trial % 3, trial % 4 - 2, 12 + trial % 5, true);
    auto one = u * invert_unit(u);
    CHECK(equal_through(one, PuiseuxSeries::constant(1), one.order()));
    CHECK(one.order() == u.order() - u.leading_exponent());
  }
}

TEST_CASE("sqrt squares back and exp is a homomorphism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    auto base = random_series(rng, 2, trial % 3, 16, true);
    auto sq = base * base;
    auto root = sqrt_series(sq);
    auto back = root * root;
    CHECK(equal_through(back, sq, back.order()));

    auto u = random_series(rng, 1, 1, 10, false);
    auto v = random_series(rng, 2, 1, 18, false);
    auto lhs = exp_series(u + v);
    auto rhs = exp_series(u) * exp_series(v);
    CHECK(equal_through(lhs, rhs, std::min(lhs.order(), rhs.order())));
  }
}

TEST_CASE("integer powers") {
  auto u = poly({{-1, 1}, {0, 1}}, 6);  // q^-1 + 1 + O(q^6)
  auto u3 = pow(u, 3);
  CHECK(u3.order() == 4);  // unknown part O(q^6) meets (q^-1)^2
  CHECK(u3.coefficient(-3) == 1);
  CHECK(u3.coefficient(-2) == 3);
  CHECK(u3.coefficient(0) == 1);
  auto back = pow(u, -2) * pow(u, 2);
  CHECK(equal_through(back, PuiseuxSeries::constant(1), back.order()));
}
