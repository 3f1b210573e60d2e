#pragma once

#include "thetaq/rational.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// The pair (a, p) indexing the theta quotient A(a,p;q), with its
/// prefactor exponent delta = p/12 - a/2 + a^2/(2p).
class ThetaSpec {
 public:
  ThetaSpec(Rational a, Rational p);

  const Rational& a() const { return a_; }
  const Rational& p() const { return p_; }
  const Rational& delta() const { return delta_; }

  /// Theta arguments (p/2, p/2 - a) of the bilateral sum in A.
  Rational theta_quadratic() const { return p_ / 2; }
  Rational theta_linear() const { return p_ / 2 - a_; }

  static Rational delta_of(const Rational& a, const Rational& p);

  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;

 private:
  Rational a_;
  Rational p_;
  Rational delta_;
};

// Every constructor returns a series known exactly for exponents < order.

/// prod_{n>=1} (1 - q^{n*scale}), expanded via the pentagonal number theorem.
PuiseuxSeries eta_series(const Rational& scale, const Rational& order);

/// sum_{n in Z} (-1)^n q^{a n^2 + b n}; requires a > 0.
PuiseuxSeries theta_series(const Rational& a, const Rational& b, const Rational& order);

/// sum_{n in Z} q^{a n^2 + b n} (no sign alternation); requires a > 0.
PuiseuxSeries theta_plain_series(const Rational& a, const Rational& b, const Rational& order);

/// A(a,p;q) = q^delta * theta(p/2, p/2 - a; q) / eta(q^p).
PuiseuxSeries A_series(const ThetaSpec& spec, const Rational& order);

/// q^delta * prod_{n>=0} (1 - q^{np+a}) (1 - q^{np+p-a}), the triple-product
/// form of A. Factors with non-positive exponent are multiplied in exactly.
PuiseuxSeries A_product_series(const ThetaSpec& spec, const Rational& order);

/// m(q) = k^2 = 16 q (sum_{n>=0} q^{n^2+n})^4 / (sum_{n in Z} q^{n^2})^4.
PuiseuxSeries modulus_series(const Rational& order);

/// k = 4 q^{1/2} exp(-4 sum_{n>=1} q^n sum_{d|n} (-1)^{d+n/d} / d).
PuiseuxSeries modulus_root_exp_series(const Rational& order);

/// h5(q) = eta(q^{1/5}) / (q^{1/5} eta(q^5)).
PuiseuxSeries h5_series(const Rational& order);

/// eta5(q) = (-1 - h5 + sqrt(5 + 2 h5 + h5^2)) / 2.
PuiseuxSeries eta5_series(const Rational& order);

}  // namespace thetaq
