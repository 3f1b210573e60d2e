#include "thetaq/modular.hpp"

#include "thetaq/errors.hpp"
#include "thetaq/numeric.hpp"

namespace thetaq {

namespace {

void require_unit_interval(const BigReal& x, const char* what) {
  if (x.sign() <= 0 || !(x < BigReal(1L, x.digits()))) {
    throw DomainError(std::string(what) + " needs 0 < x < 1, got " + x.to_sci(6));
  }
}

}  // namespace

SingularChain singular_chain(const BigReal& k) {
  require_unit_interval(k, "singular_chain");
  const int d = k.digits();
  BigReal one(1L, d);
  BigReal k2 = k * k;
  BigReal k12 = sqrt(one - k2);
  BigReal k21 = (BigReal(2L, d) - k2 - k12 * Rational(2)) / k2;
  BigReal k22 = sqrt(one - k21 * k21);
  return SingularChain{k, k12, k21, k22};
}

BigReal s_n(const BigReal& x, int n, int digits) {
  require_unit_interval(x, "s_n");
  if (n < 1) throw DomainError("s_n needs n >= 1");
  const int work = digits + kGuardDigits;
  BigReal r = inverse_modulus(x.with_digits(work), work) * Rational(n * n);
  return singular_modulus(r, work).k.with_digits(digits);
}

BigReal landen_k4(const BigReal& k) {
  require_unit_interval(k, "landen_k4");
  BigReal one(1L, k.digits());
  BigReal c = sqrt(one - k * k);
  // 1 - c loses digits for small k; k^2 / (1 + c) does not.
  return (k * k / (one + c)) / (one + c);
}

BigReal p2_A14(const BigReal& w) {
  if (w.sign() <= 0) throw DomainError("p2_A14 needs w > 0");
  BigReal w4 = pow(w, 4L);
  BigReal w16 = pow(w4, 4L);
  BigReal inner = w16 + w4 * sqrt(pow(w4, 6L) + Rational(64));
  return pow(inner * Rational(1, 2), Rational(1, 8));
}

BigReal modular_eq2_A14(const BigReal& u, const BigReal& v) {
  BigReal u8 = pow(u, 8L);
  BigReal v8 = pow(v, 8L);
  return u8 * Rational(16) + u8 * u8 * v8 - v8 * v8;
}

BigReal q_a14(const BigReal& x) {
  require_unit_interval(x, "q_a14");
  BigReal one(1L, x.digits());
  return pow((one - x * x) * Rational(4) / x, Rational(1, 12));
}

BigReal check_theorem3_instance(const BigReal& x, int digits) {
  const int work = digits + kGuardDigits;
  const BigReal xw = x.with_digits(work);
  BigReal lhs = q_a14(s_n(xw, 2, work));
  BigReal rhs = p2_A14(q_a14(xw));
  return abs(lhs - rhs).with_digits(digits);
}

}  // namespace thetaq
