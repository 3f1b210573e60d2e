#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "thetaq/rational.hpp"

namespace thetaq {

/// Truncated Laurent-Puiseux series over Q in the variable q.
///
/// Exponents live on the grid (1/denom)Z and are stored as integer grid
/// indices. Coefficients at indices >= hi are unknown; a series with
/// hi == kExact is a finite Laurent polynomial known exactly. Values are
/// immutable after construction and always kept normalized: denom is the
/// smallest grid carrying every nonzero term and the truncation bound.
class PuiseuxSeries {
 public:
  using Index = std::int64_t;
  using Terms = std::map<Index, Rational>;

  static constexpr Index kExact = std::numeric_limits<Index>::max();

  /// The exact zero series.
  PuiseuxSeries() = default;

  /// Builds from grid terms; drops zero coefficients and normalizes.
  /// Throws DomainError if a key is >= hi or denom < 1.
  PuiseuxSeries(Index denom, Terms terms, Index hi = kExact);

  static PuiseuxSeries constant(const Rational& c);
  static PuiseuxSeries monomial(const Rational& c, const Rational& exponent);

  Index denom() const { return denom_; }
  Index hi() const { return hi_; }
  /// Lowest grid index with a nonzero coefficient; hi() for a truncated zero.
  Index lo() const;
  bool is_exact() const { return hi_ == kExact; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Truncation bound as an exponent (exponents < order() are known).
  Rational order() const;
  Rational leading_exponent() const;
  const Rational& leading_coefficient() const;

  /// Coefficient of q^e. Throws DomainError when e is at or beyond the bound.
  Rational coefficient(const Rational& e) const;

  /// Forget every term with exponent >= order.
  PuiseuxSeries truncated(const Rational& order) const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries& operator+=(const PuiseuxSeries& rhs);
  PuiseuxSeries& operator-=(const PuiseuxSeries& rhs);
  PuiseuxSeries& operator*=(const PuiseuxSeries& rhs);
  PuiseuxSeries& operator*=(const Rational& c);

  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(PuiseuxSeries a, const Rational& c) { return a *= c; }
  friend PuiseuxSeries operator*(const Rational& c, PuiseuxSeries a) { return a *= c; }

  /// Multiplies by c*q^alpha; the truncation bound moves with alpha.
  PuiseuxSeries mul_monomial(const Rational& c, const Rational& alpha) const;

  /// Structural equality: same grid, same bound, same coefficients.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  /// Same series refined onto a finer grid (multiple of denom()).
  /// The result is deliberately left unnormalized.
  PuiseuxSeries rebased(Index new_denom) const;

  std::string to_string(int max_terms = 12) const;

 private:
  void normalize();

  Index denom_ = 1;
  Index hi_ = kExact;
  Terms terms_;
};

/// u^n for any integer n; negative n inverts first.
PuiseuxSeries pow(const PuiseuxSeries& u, std::int64_t n);

/// Multiplicative inverse of a series with nonzero leading coefficient.
PuiseuxSeries invert_unit(const PuiseuxSeries& u);

/// exp(u) for u with strictly positive valuation.
PuiseuxSeries exp_series(const PuiseuxSeries& u);

/// Square root with positive leading coefficient; the leading coefficient
/// must be the square of a rational.
PuiseuxSeries sqrt_series(const PuiseuxSeries& u);

/// Substitutes q -> q^s for s > 0.
PuiseuxSeries rescale(const PuiseuxSeries& u, const Rational& s);

/// True when a and b are both known below `order` and agree there.
bool equal_through(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& order);

/// Exponent of the first nonzero coefficient, or order() if none is known.
Rational vanishing_order(const PuiseuxSeries& u);

}  // namespace thetaq
