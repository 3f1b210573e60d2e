#include <doctest.h>

#include "thetaq/errors.hpp"
#include "thetaq/modular.hpp"
#include "thetaq/numeric.hpp"

using namespace thetaq;

namespace {

constexpr int kDigits = 50;

BigReal lit(const char* s, int d = kDigits + 20) { return BigReal(std::string(s), d); }

bool close(const BigReal& a, const BigReal& b, int digits = kDigits) {
  return abs(a - b) < tolerance(digits);
}

}  // namespace

TEST_CASE("s_n basics") {
  const BigReal x = lit("0.3");
  CHECK(close(s_n(x, 1, kDigits), x));
  BigReal inv_sqrt2 = sqrt(BigReal(Rational(1, 2), kDigits + 20));
  BigReal k4 = BigReal(3L, kDigits + 20) - sqrt(BigReal(8L, kDigits + 20));
  CHECK(close(s_n(inv_sqrt2, 2, kDigits), k4));
  for (const char* s : {"0.3", "0.6"}) {
    BigReal y = lit(s);
    CHECK(close(s_n(y, 2, kDigits), landen_k4(y)));
  }
  CHECK_THROWS_AS(s_n(lit("1.2"), 2, kDigits), DomainError);
}

TEST_CASE("s_n unwinds the singular modulus") {
  for (int r : {1, 2}) {
    BigReal k = singular_modulus(Rational(r), kDigits + 20).k;
    for (int n : {2, 3}) {
      CHECK(close(s_n(k, n, kDigits), singular_modulus(Rational(n * n * r), kDigits).k));
    }
  }
}

TEST_CASE("Landen step") {
  BigReal inv_sqrt2 = sqrt(BigReal(Rational(1, 2), kDigits + 20));
  CHECK(close(landen_k4(inv_sqrt2), BigReal(3L, kDigits + 20) - sqrt(BigReal(8L, kDigits + 20))));
  BigReal tiny = landen_k4(lit("1e-6"));
  CHECK(abs(tiny - lit("2.5e-13")) < lit("1e-24"));
  for (int r : {1, 2}) {
    BigReal k = singular_modulus(Rational(r), kDigits + 20).k;
    CHECK(close(landen_k4(k), singular_modulus(Rational(4 * r), kDigits).k));
  }
}

TEST_CASE("degree-2 modular equation of A(1,4)") {
  BigReal u = lit("1.1");
  BigReal v = p2_A14(u);
  CHECK(abs(modular_eq2_A14(u, v)) < tolerance(kDigits));

  const int work = kDigits + kGuardDigits;
  for (int r : {1, 2}) {
    BigReal q = nome_of(BigReal(long(r), work), work);
    BigReal a1 = eval_A(ThetaSpec(1, 4), q, work);
    BigReal a2 = eval_A(ThetaSpec(1, 4), q * q, work);
    CHECK(close(p2_A14(a1), a2));
    CHECK(abs(modular_eq2_A14(a1, a2)) < tolerance(kDigits));
  }

  // Small-w behaviour: v ~ w^{1/2} 8^{1/8} / 2^{1/8} = w^{1/2} 4^{1/8}.
  BigReal w = lit("1e-8");
  BigReal ratio = p2_A14(w) / (sqrt(w) * pow(BigReal(4L, kDigits + 20), Rational(1, 8)));
  CHECK(abs(ratio - Rational(1)) < lit("1e-20"));
}

TEST_CASE("functional equation instance for A(1,4)") {
  for (const char* s : {"0.3", "0.6"}) {
    CHECK(check_theorem3_instance(lit(s), kDigits) < tolerance(kDigits));
  }
  BigReal inv_sqrt2 = sqrt(BigReal(Rational(1, 2), kDigits + 20));
  CHECK(check_theorem3_instance(inv_sqrt2, kDigits) < tolerance(kDigits));
}

TEST_CASE("singular chain at r = 1") {
  BigReal k = singular_modulus(Rational(1), kDigits + 20).k;
  auto chain = singular_chain(k);
  CHECK(close(chain.k21, singular_modulus(Rational(4), kDigits).k));
  CHECK(close(chain.k12 * chain.k12 + chain.k11 * chain.k11, BigReal(1L, kDigits)));
  for (const auto* x : {&chain.k11, &chain.k12, &chain.k21, &chain.k22}) {
    CHECK(x->sign() > 0);
    CHECK(*x < BigReal(1L, kDigits));
  }
}
