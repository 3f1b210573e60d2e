#include "thetaq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

void require_nome(const BigReal& q) {
  if (q.sign() <= 0 || !(q < BigReal(1L, q.digits()))) {
    throw DomainError("nome must satisfy 0 < q < 1");
  }
}

// Number of exponent units beyond the leading term after which q^e is
// negligible at `work` digits.
double negligible_span(const BigReal& q, int work) {
  const double lq = -std::log(q.to_double());
  if (!(lq > 0) || std::isinf(lq)) {
    BigReal l = -log(q);
    return work * 2.302585092994046 / l.to_double() + 2;
  }
  return work * 2.302585092994046 / lq + 2;
}

BigReal quadratic_sum(const Rational& a, const Rational& b, const BigReal& q, int digits,
                      bool alternating) {
  if (sgn(a) <= 0) throw DomainError("theta needs a > 0");
  require_nome(q);
  const int work = digits + kGuardDigits;
  const BigReal qq = q.with_digits(work);
  const BigReal lq = log(qq);
  const double span = negligible_span(qq, work);

  const double ad = a.get_d();
  const double bd = b.get_d();
  const auto vertex = static_cast<long>(std::floor(-bd / (2 * ad)));
  auto exponent = [&](long n) -> Rational { return a * n * n + b * n; };
  Rational emin = std::min(exponent(vertex), exponent(vertex + 1));

  // Smallest n0 with a n0^2 - |b| n0 > span handled implicitly: walk out
  // from the vertex until the term is negligible relative to the largest.
  BigReal sum(work);
  auto add = [&](long n) {
    Rational e = exponent(n);
    if (Rational(e - emin).get_d() > span) return false;
    BigReal term = exp(lq * e);
    if (alternating && (n % 2 != 0)) {
      sum -= term;
    } else {
      sum += term;
    }
    return true;
  };
  for (long n = vertex; add(n); --n) {
  }
  for (long n = vertex + 1; add(n); ++n) {
  }
  return sum.with_digits(digits);
}

BigReal theta2_over_2q14(const BigReal& q, double span) {
  // sum_{n>=0} q^{n^2+n}
  BigReal s(q.digits());
  BigReal one(1L, q.digits());
  for (long n = 0; n * n + n <= span; ++n) s += pow(q, n * n + n);
  return s;
}

}  // namespace

BigReal tolerance(int digits, int slack) { return pow10(-(digits - slack), std::max(digits, 20)); }

BigReal agm(const BigReal& a0, const BigReal& b0, int* iterations) {
  BigReal a = a0;
  BigReal b = b0;
  const BigReal eps = pow10(-(a.digits() + 2), a.digits());
  int it = 0;
  while (abs(a - b) > eps * abs(a)) {
    BigReal next_a = (a + b) * Rational(1, 2);
    b = sqrt(a * b);
    a = std::move(next_a);
    ++it;
    if (it > 10000) throw ConsistencyError("AGM failed to converge");
  }
  if (iterations) *iterations = it;
  return a;
}

BigReal ellipk(const BigReal& x, int digits) {
  const int work = digits + kGuardDigits;
  BigReal xx = x.with_digits(work);
  BigReal one(1L, work);
  if (xx.sign() < 0 || xx >= one) throw DomainError("ellipk needs 0 <= x < 1");
  BigReal k = pi(work) / (agm(one, sqrt(one - xx * xx)) * Rational(2));
  return k.with_digits(digits);
}

BigReal nome_of(const BigReal& r, int digits) {
  const int work = digits + kGuardDigits;
  if (r.sign() <= 0) throw DomainError("r must be positive");
  return exp(-(pi(work) * sqrt(r.with_digits(work)))).with_digits(digits);
}

EvalPoint point_from_nome(const BigReal& q, int digits) {
  require_nome(q);
  const int work = digits + kGuardDigits;
  const BigReal qq = q.with_digits(work);
  const double span = negligible_span(qq, work);
  BigReal s = theta2_over_2q14(qq, span);
  BigReal t3 = quadratic_sum(1, 0, qq, work, false).with_digits(work);
  BigReal t4 = quadratic_sum(1, 0, qq, work, true).with_digits(work);
  // k = theta2^2/theta3^2 with theta2 = 2 q^{1/4} s.
  BigReal k = sqrt(qq) * s * s * Rational(4) / (t3 * t3);
  BigReal kp = (t4 * t4) / (t3 * t3);
  BigReal lq = log(qq);
  BigReal r = (lq * lq) / (pi(work) * pi(work));
  return EvalPoint{std::nullopt, r.with_digits(digits), q.with_digits(digits), k.with_digits(digits),
                   kp.with_digits(digits)};
}

EvalPoint singular_modulus(const BigReal& r, int digits) {
  if (r.sign() <= 0) throw DomainError("singular_modulus needs r > 0");
  const int work = digits + kGuardDigits;
  BigReal q = nome_of(r, work);
  EvalPoint pt = point_from_nome(q, work);
  // Certificate: K(k')/K(k) = sqrt(r).
  BigReal ratio = ellipk(pt.kprime, work) / ellipk(pt.k, work);
  BigReal target = sqrt(r.with_digits(work));
  BigReal resid = abs(ratio - target);
  if (resid > tolerance(digits, 5) * target) {
    throw ConsistencyError("singular modulus failed its K'/K certificate (residual " +
                           resid.to_sci() + ")");
  }
  return EvalPoint{std::nullopt, r.with_digits(digits), pt.q.with_digits(digits),
                   pt.k.with_digits(digits), pt.kprime.with_digits(digits)};
}

EvalPoint singular_modulus(const Rational& r, int digits) {
  if (sgn(r) <= 0) throw DomainError("singular_modulus needs r > 0");
  EvalPoint pt = singular_modulus(BigReal(r, digits + kGuardDigits), digits);
  pt.r_exact = r;
  return pt;
}

BigReal inverse_modulus(const BigReal& x, int digits) {
  const int work = digits + kGuardDigits;
  BigReal xx = x.with_digits(work);
  BigReal one(1L, work);
  if (xx.sign() <= 0 || xx >= one) throw DomainError("inverse_modulus needs 0 < x < 1");
  BigReal ratio = ellipk(sqrt(one - xx * xx), work) / ellipk(xx, work);
  return (ratio * ratio).with_digits(digits);
}

BigReal eval_theta(const Rational& a, const Rational& b, const BigReal& q, int digits) {
  return quadratic_sum(a, b, q, digits, true);
}

BigReal eval_theta_plain(const Rational& a, const Rational& b, const BigReal& q, int digits) {
  return quadratic_sum(a, b, q, digits, false);
}

BigReal eval_eta(const Rational& p, const BigReal& q, int digits) {
  if (sgn(p) <= 0) throw DomainError("eta needs a positive scale");
  require_nome(q);
  const int work = digits + kGuardDigits;
  const BigReal qq = q.with_digits(work);
  const BigReal x = pow(qq, p);
  const double span = negligible_span(x, work);
  BigReal prod(1L, work);
  BigReal one(1L, work);
  BigReal xn = x;
  for (long n = 1; n <= static_cast<long>(span) + 1; ++n) {
    prod *= one - xn;
    xn *= x;
  }
  return prod.with_digits(digits);
}

BigReal eval_A(const ThetaSpec& spec, const BigReal& q, int digits) {
  require_nome(q);
  const int work = digits + kGuardDigits;
  const BigReal qq = q.with_digits(work);
  BigReal theta = eval_theta(spec.theta_quadratic(), spec.theta_linear(), qq, work);
  BigReal eta = eval_eta(spec.p(), qq, work);
  return (pow(qq, spec.delta()) * theta / eta).with_digits(digits);
}

SeriesValue real_eval_series(const PuiseuxSeries& u, const BigReal& q, int digits) {
  require_nome(q);
  const int work = digits + kGuardDigits;
  const BigReal qq = q.with_digits(work);
  const BigReal step = exp(log(qq) * Rational(1, static_cast<long>(u.denom())));

  BigReal sum(work);
  std::vector<BigReal> last;
  if (!u.is_zero()) {
    auto k0 = u.terms().begin()->first;
    BigReal power = pow(step, static_cast<long>(k0));
    auto prev = k0;
    for (const auto& [k, c] : u.terms()) {
      power *= pow(step, static_cast<long>(k - prev));
      prev = k;
      BigReal term = power * c;
      sum += term;
      last.push_back(abs(term));
      if (last.size() > 5) last.erase(last.begin());
    }
  }
  BigReal tail(work);
  if (!u.is_exact()) {
    for (const auto& t : last) {
      if (t > tail) tail = t;
    }
  }
  SeriesValue out{sum.with_digits(digits), tail.with_digits(digits), false};
  out.low_confidence = !u.is_exact() && out.tail_estimate > tolerance(digits);
  return out;
}

}  // namespace thetaq
