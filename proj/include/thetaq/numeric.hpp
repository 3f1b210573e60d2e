#pragma once

#include <optional>

#include "thetaq/bigreal.hpp"
#include "thetaq/qseries.hpp"
#include "thetaq/rational.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// Extra digits every kernel carries internally before rounding to the
/// requested precision.
inline constexpr int kGuardDigits = 15;

/// A point on the modular curve: nome q = e^{-pi sqrt(r)} with its modulus.
struct EvalPoint {
  std::optional<Rational> r_exact;
  BigReal r;
  BigReal q;
  BigReal k;
  BigReal kprime;
};

/// Arithmetic-geometric mean; writes the iteration count when asked.
BigReal agm(const BigReal& a, const BigReal& b, int* iterations = nullptr);

/// Complete elliptic integral of the first kind K(x) = pi / (2 AGM(1, sqrt(1-x^2))).
BigReal ellipk(const BigReal& x, int digits);

/// e^{-pi sqrt(r)}.
BigReal nome_of(const BigReal& r, int digits);

/// Modulus pair (k, k') from the nome via theta quotients
/// k = theta2^2/theta3^2, k' = theta4^2/theta3^2. No certification.
EvalPoint point_from_nome(const BigReal& q, int digits);

/// k_r solving K(k')/K(k) = sqrt(r), certified by substitution.
/// Throws ConsistencyError when the certificate fails.
EvalPoint singular_modulus(const Rational& r, int digits);
EvalPoint singular_modulus(const BigReal& r, int digits);

/// k_i(x) = (K(sqrt(1-x^2)) / K(x))^2 for 0 < x < 1.
BigReal inverse_modulus(const BigReal& x, int digits);

/// sum_n (-1)^n q^{a n^2 + b n}, a > 0, 0 < q < 1.
BigReal eval_theta(const Rational& a, const Rational& b, const BigReal& q, int digits);
/// sum_n q^{a n^2 + b n} without the sign alternation.
BigReal eval_theta_plain(const Rational& a, const Rational& b, const BigReal& q, int digits);
/// prod_{n>=1} (1 - q^{n p}).
BigReal eval_eta(const Rational& p, const BigReal& q, int digits);
/// A(a,p;q) = q^delta theta(p/2, p/2-a; q) / eta(q^p).
BigReal eval_A(const ThetaSpec& spec, const BigReal& q, int digits);

struct SeriesValue {
  BigReal value;
  /// Largest magnitude among the last retained terms.
  BigReal tail_estimate;
  bool low_confidence = false;
};

/// Sum of coeff * q^exponent over the known terms of u.
SeriesValue real_eval_series(const PuiseuxSeries& u, const BigReal& q, int digits);

/// 10^{-digits + slack}.
BigReal tolerance(int digits, int slack = 10);

}  // namespace thetaq
