#include <doctest.h>

#include <map>
#include <vector>

#include "thetaq/errors.hpp"
#include "thetaq/qseries.hpp"

using namespace thetaq;

namespace {

// Oracle: expand prod_{n>=1}(1 - q^n) by repeated binomial multiplication.
std::vector<long> direct_eta(long bound) {
  std::vector<long> c(static_cast<std::size_t>(bound), 0);
  c[0] = 1;
  for (long n = 1; n < bound; ++n) {
    for (long k = bound - 1; k >= n; --k) c[k] -= c[k - n];
  }
  return c;
}

// Oracle: long division 1 / f for an integer power series f with f[0] = 1.
std::vector<long> long_divide(const std::vector<long>& f) {
  std::vector<long> g(f.size(), 0);
  for (std::size_t n = 0; n < f.size(); ++n) {
    long acc = n == 0 ? 1 : 0;
    for (std::size_t j = 1; j <= n; ++j) acc -= f[j] * g[n - j];
    g[n] = acc;
  }
  return g;
}

// Oracle: direct bilateral summation over |n| <= 40.
std::map<Rational, long> direct_theta(const Rational& a, const Rational& b, const Rational& order) {
  std::map<Rational, long> out;
  for (long n = -40; n <= 40; ++n) {
    Rational e = a * n * n + b * n;
    if (e < order) out[e] += (n % 2 == 0) ? 1 : -1;
  }
  return out;
}

}  // namespace

TEST_CASE("ThetaSpec prefactor exponent") {
  CHECK(ThetaSpec(1, 4).delta() == Rational(-1, 24));
  CHECK(ThetaSpec(8, 6).delta() == Rational(11, 6));
  CHECK(ThetaSpec(Rational(1, 2), 4).delta() == Rational(11, 96));
  CHECK_THROWS_AS(ThetaSpec(1, 0), DomainError);
  CHECK_THROWS_AS(ThetaSpec(1, -2), DomainError);
}

TEST_CASE("eta_series matches the direct product") {
  const long bound = 60;
  auto eta = eta_series(1, bound);
  auto oracle = direct_eta(bound);
  for (long k = 0; k < bound; ++k) CHECK(eta.coefficient(k) == oracle[k]);
  CHECK(eta.coefficient(5) == 1);
  CHECK(eta.coefficient(7) == 1);
  CHECK(eta.coefficient(12) == -1);

  CHECK(eta_series(4, 200) == rescale(eta_series(1, 50), 4));
  auto tiny = eta_series(4, 3);
  CHECK(equal_through(tiny, PuiseuxSeries::constant(1), 3));
}

TEST_CASE("inverse of eta(q^4) by long division") {
  const long bound = 30;
  auto inv = invert_unit(eta_series(1, bound));
  auto oracle = long_divide(direct_eta(bound));
  for (long k = 0; k < bound; ++k) CHECK(inv.coefficient(k) == oracle[k]);

  auto inv4 = invert_unit(eta_series(4, 4 * bound));
  CHECK(inv4.coefficient(0) == 1);
  CHECK(inv4.coefficient(4) == 1);
  CHECK(inv4.coefficient(8) == 2);
  for (long k = 0; k < bound; ++k) CHECK(inv4.coefficient(4 * k) == oracle[k]);
}

TEST_CASE("theta_series by direct summation") {
  auto th = theta_series(2, 1, 40);
  for (const auto& [e, c] : direct_theta(2, 1, 40)) CHECK(th.coefficient(e) == c);
  CHECK(th.coefficient(0) == 1);
  CHECK(th.coefficient(1) == -1);
  CHECK(th.coefficient(3) == -1);
  CHECK(th.coefficient(6) == 1);
  CHECK(th.coefficient(10) == 1);

  auto odd = theta_series(3, -5, 30);
  CHECK(odd.leading_exponent() == -2);
  CHECK(odd.leading_coefficient() == -1);

  CHECK_THROWS_AS(theta_series(0, 1, 10), DomainError);
  CHECK_THROWS_AS(theta_series(-1, 1, 10), DomainError);
}

TEST_CASE("theta symmetry b -> -b and the rescale family") {
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{
           {2, 1}, {3, -5}, {Rational(5, 2), Rational(3, 2)}, {Rational(1, 3), Rational(7, 4)}}) {
    CHECK(theta_series(a, b, 50) == theta_series(a, -b, 50));
    for (const Rational& s : {Rational(2), Rational(1, 2), Rational(3, 5)}) {
      CHECK(rescale(theta_series(a, b, 40), s) == theta_series(a * s, b * s, 40 * s));
    }
  }
  CHECK(rescale(theta_series(2, 1, 60), Rational(1, 2)) == theta_series(1, Rational(1, 2), 30));
}

TEST_CASE("A_series leading terms") {
  auto a14 = A_series(ThetaSpec(1, 4), 50);
  CHECK(a14.leading_exponent() == Rational(-1, 24));
  CHECK(a14.leading_coefficient() == 1);
  // q^{-1/24} (1-q)(1-q^3)(1-q^5)...
  auto prod = PuiseuxSeries::constant(1).truncated(50 + Rational(1, 24));
  for (long e = 1; e < 51; e += 2) {
    prod = prod * (PuiseuxSeries::constant(1) - PuiseuxSeries::monomial(1, e));
  }
  CHECK(equal_through(a14, prod.mul_monomial(1, Rational(-1, 24)), 50));

  auto a86 = A_series(ThetaSpec(8, 6), 30);
  CHECK(a86.leading_exponent() == Rational(-1, 6));

  auto ahalf = A_series(ThetaSpec(Rational(1, 2), 4), 20);
  CHECK(96 % ahalf.denom() == 0);
  CHECK(ahalf.leading_exponent() == Rational(11, 96));
}

TEST_CASE("A_series agrees with the n>=0 triple-product form") {
  for (auto [a, p] : std::vector<std::pair<Rational, Rational>>{{1, 4},
                                                                 {1, 3},
                                                                 {-1, 6},
                                                                 {-2, 8},
                                                                 {1, 5},
                                                                 {Rational(1, 2), 4},
                                                                 {Rational(1, 2), 2},
                                                                 {8, 6}}) {
    ThetaSpec spec(a, p);
    auto lhs = A_series(spec, 200);
    auto rhs = A_product_series(spec, 200);
    CAPTURE(to_string(a));
    CAPTURE(to_string(p));
    CHECK(lhs.order() == 200);
    CHECK(rhs.order() == 200);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("modulus_series") {
  auto m = modulus_series(40);
  CHECK(m.leading_exponent() == 1);
  // Frozen from an independent rational-arithmetic expansion of the theta quotient.
  CHECK(m.coefficient(1) == 16);
  CHECK(m.coefficient(2) == -128);
  CHECK(m.coefficient(3) == 704);
  CHECK(m.coefficient(4) == -3072);
  CHECK(m.order() == 40);

  auto k = sqrt_series(m);
  CHECK(k.leading_exponent() == Rational(1, 2));
  CHECK(k.leading_coefficient() == 4);
}

TEST_CASE("exp-form expansion reproduces sqrt of the modulus") {
  auto lhs = modulus_root_exp_series(100);
  auto rhs = sqrt_series(modulus_series(Rational(201, 2)));
  CHECK(equal_through(lhs, rhs, 100));
  auto sq = lhs * lhs;
  CHECK(equal_through(sq, modulus_series(100), 100));
}

TEST_CASE("rescale of the modulus") {
  auto m2 = rescale(modulus_series(30), 2);
  CHECK(m2.order() == 60);
  CHECK(m2.coefficient(2) == 16);
  CHECK(m2.coefficient(4) == -128);
  CHECK(m2.coefficient(3) == 0);
}

TEST_CASE("h5 and eta5") {
  auto h = h5_series(20);
  CHECK(h.leading_exponent() == Rational(-1, 5));
  CHECK(h.leading_coefficient() == 1);

  auto e5 = eta5_series(20);
  CHECK(e5.order() == 20);
  // Quadratic-root contract: x^2 + (1+h) x + ((1+h)^2 - (5+2h+h^2))/4 = 0.
  auto one = PuiseuxSeries::constant(1);
  auto b = one + h;
  auto c = (b * b - (one * Rational(5) + h * Rational(2) + h * h)) * Rational(1, 4);
  auto resid = e5 * e5 + b * e5 + c;
  CHECK(resid.truncated(19).is_zero());

  auto v = pow(rescale(eta5_series(10), 4), 5);
  CHECK(v.order() >= 40);
  CHECK(v.leading_exponent() == 4);  // eta5(q) ~ q^{1/5}
}
