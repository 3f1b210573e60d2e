#include <doctest.h>

#include <cmath>
#include <random>

#include "thetaq/errors.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/qseries.hpp"

using namespace thetaq;

namespace {

constexpr int kDigits = 50;

BigReal dec(const char* s, int digits = kDigits) { return BigReal(std::string(s), digits + 10); }

bool close(const BigReal& a, const BigReal& b, int slack = 10) {
  int d = std::min(a.digits(), b.digits());
  return abs(a - b) < tolerance(d, slack) * (abs(b) + Rational(1));
}

BigReal q_of(long r, int digits = kDigits) { return nome_of(BigReal(r, digits), digits); }

}  // namespace

TEST_CASE("ellipk") {
  BigReal zero(kDigits);
  CHECK(close(ellipk(zero, kDigits), pi(kDigits) * Rational(1, 2)));

  BigReal s = sqrt(BigReal(Rational(1, 2), kDigits));
  // mpmath ellipk(1/2) at 60 digits
  CHECK(close(ellipk(s, kDigits), dec("1.85407467730137191843385034719526004621759882352176690558593")));

  CHECK(ellipk(BigReal(Rational(3, 10), kDigits), kDigits) < ellipk(BigReal(Rational(3, 5), kDigits), kDigits));
  CHECK_THROWS_AS(ellipk(BigReal(1L, kDigits), kDigits), DomainError);
  CHECK_THROWS_AS(ellipk(BigReal(-1L, kDigits), kDigits), DomainError);
}

TEST_CASE("AGM converges quadratically") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(0.001, 0.999);
  for (int digits : {30, 60, 120, 240}) {
    for (int t = 0; t < 10; ++t) {
      BigReal one(1L, digits);
      BigReal x(std::to_string(dist(rng)), digits);
      int its = 0;
      agm(one, sqrt(one - x * x), &its);
      CHECK(its <= 2 * std::log2(digits) + 6);
    }
  }
}

TEST_CASE("singular_modulus") {
  auto p1 = singular_modulus(Rational(1), kDigits);
  CHECK(close(p1.k, sqrt(BigReal(Rational(1, 2), kDigits))));
  CHECK(close(p1.k * p1.k + p1.kprime * p1.kprime, BigReal(1L, kDigits)));

  auto p4 = singular_modulus(Rational(4), kDigits);
  BigReal landen = (BigReal(1L, kDigits) - p1.kprime) / (BigReal(1L, kDigits) + p1.kprime);
  CHECK(close(p4.k, landen));
  CHECK(close(p4.k, BigReal(3L, kDigits) - sqrt(BigReal(8L, kDigits))));

  auto p2 = singular_modulus(Rational(2), kDigits);
  CHECK(close(p2.k, sqrt(BigReal(2L, kDigits)) - Rational(1)));

  CHECK_THROWS_AS(singular_modulus(Rational(0), kDigits), DomainError);
  CHECK_THROWS_AS(singular_modulus(Rational(-1), kDigits), DomainError);
}

TEST_CASE("k^2 + k'^2 = 1 on every constructed point") {
  for (const char* r : {"1/7", "1/2", "1", "5/3", "3", "10", "40"}) {
    auto pt = singular_modulus(parse_rational(r), kDigits);
    CHECK(close(pt.k * pt.k + pt.kprime * pt.kprime, BigReal(1L, kDigits)));
    CHECK(pt.k.sign() > 0);
    CHECK(pt.k < BigReal(1L, kDigits));
  }
}

TEST_CASE("inverse_modulus round trips") {
  BigReal x(Rational(3, 10), kDigits);
  auto pt = singular_modulus(inverse_modulus(x, kDigits), kDigits);
  CHECK(close(pt.k, x));

  CHECK(close(inverse_modulus(sqrt(BigReal(Rational(1, 2), kDigits)), kDigits), BigReal(1L, kDigits)));
  auto p2 = singular_modulus(Rational(2), kDigits);
  CHECK(close(inverse_modulus(p2.k, kDigits), BigReal(2L, kDigits)));

  BigReal half(Rational(1, 2), kDigits);
  BigReal r = inverse_modulus(half, kDigits);
  CHECK(close(r, dec("1.63651016747491204219560639105877446733043413950519128607114")));
  CHECK(close(singular_modulus(r, kDigits).k, half));

  CHECK_THROWS_AS(inverse_modulus(BigReal(0L, kDigits), kDigits), DomainError);
  CHECK_THROWS_AS(inverse_modulus(BigReal(1L, kDigits), kDigits), DomainError);
}

TEST_CASE("direct evaluations") {
  BigReal q1 = q_of(1);
  // Direct bilateral summation oracle (|n| <= 10 suffices at e^{-pi}).
  CHECK(close(eval_theta(2, 1, q1, kDigits),
              dec("0.956705388731092292713504438378487203536680391719754610355581")));
  CHECK(close(eval_eta(1, q1, kDigits), dec("0.954918789987674103751233978110291077632715373807805283148799")));

  BigReal a14 = eval_A(ThetaSpec(1, 4), q1, kDigits);
  CHECK(close(a14, pow(BigReal(2L, kDigits), Rational(1, 8))));

  CHECK(close(eval_eta(4, q1, kDigits), eval_eta(1, pow(q1, 4L), kDigits)));

  CHECK_THROWS_AS(eval_theta(2, 1, BigReal(1L, kDigits), kDigits), DomainError);
  CHECK_THROWS_AS(eval_eta(1, BigReal(0L, kDigits), kDigits), DomainError);
  CHECK_THROWS_AS(eval_theta(0, 1, q1, kDigits), DomainError);
}

TEST_CASE("real_eval_series") {
  BigReal q1 = q_of(1);
  auto m = real_eval_series(modulus_series(200), q1, 60);
  CHECK_FALSE(m.low_confidence);
  CHECK(abs(m.value - BigReal(Rational(1, 2), 60)) < pow10(-20, 60));

  auto one = real_eval_series(PuiseuxSeries::constant(1), q1, kDigits);
  CHECK(close(one.value, BigReal(1L, kDigits)));
  CHECK_FALSE(one.low_confidence);

  auto short_series = real_eval_series(modulus_series(3), q1, kDigits);
  CHECK(short_series.low_confidence);
}

TEST_CASE("two-path agreement between series and direct evaluation") {
  const int digits = 40;
  const Rational order = 200;
  auto th = theta_series(2, 1, order);
  auto eta4 = eta_series(4, order);
  auto a14 = A_series(ThetaSpec(1, 4), order);
  auto m = modulus_series(order);
  for (long r : {1, 2, 3}) {
    CAPTURE(r);
    auto pt = singular_modulus(Rational(r), digits);
    const BigReal& q = pt.q;
    BigReal tol = tolerance(digits);
    CHECK(abs(real_eval_series(th, q, digits).value - eval_theta(2, 1, q, digits)) < tol);
    CHECK(abs(real_eval_series(eta4, q, digits).value - eval_eta(4, q, digits)) < tol);
    CHECK(abs(real_eval_series(a14, q, digits).value - eval_A(ThetaSpec(1, 4), q, digits)) < tol);
    CHECK(abs(real_eval_series(m, q, digits).value - pt.k * pt.k) < tol);
  }
}

TEST_CASE("precision doubling agrees to the smaller precision") {
  for (int digits : {30, 60}) {
    for (long r : {1, 3}) {
      auto lo = singular_modulus(Rational(r), digits);
      auto hi = singular_modulus(Rational(r), 2 * digits);
      CHECK(abs(lo.k - hi.k.with_digits(digits)) < tolerance(digits, 2));
      BigReal a_lo = eval_A(ThetaSpec(-1, 6), lo.q, digits);
      BigReal a_hi = eval_A(ThetaSpec(-1, 6), hi.q, 2 * digits);
      CHECK(abs(a_lo - a_hi.with_digits(digits)) < tolerance(digits, 2) * abs(a_hi));
      BigReal k_lo = ellipk(lo.k, digits);
      BigReal k_hi = ellipk(hi.k, 2 * digits);
      CHECK(abs(k_lo - k_hi.with_digits(digits)) < tolerance(digits, 2));
    }
  }
}
