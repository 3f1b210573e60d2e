#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thetaq/bigreal.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

/// Integer polynomial c0 + c1 x + ... + cd x^d with cd > 0 and content 1.
class IntPoly {
 public:
  /// Coefficients low degree first; trailing zeros are dropped. Throws
  /// DomainError for the zero polynomial.
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigReal evaluate(const BigReal& x) const;
  /// Largest coefficient size in decimal digits.
  std::size_t height_digits() const;
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// True when a divides b over the rationals.
bool divides(const IntPoly& a, const IntPoly& b);

/// Exact-rational LLL with delta = 0.99 on the rows of `basis`.
std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> basis);

/// Smallest-degree integer polynomial found by lattice reduction on
/// (1, x, ..., x^d) scaled by 10^digits, d = 1..d_max. A candidate must leave
/// |P(x)| < 10^{-0.6 digits} with coefficients of at most 0.3 digits decimal
/// digits, and is then re-checked on x at twice the precision.
///
/// This overload re-checks on x itself, so give x at least 2*digits of
/// precision for the full certificate. Throws NotFound with the bound hit.
IntPoly recognize(const BigReal& x, int d_max, int digits);

/// Same search; `value(d)` must return x correct to d digits and is called
/// at digits and at 2*digits.
IntPoly recognize(const std::function<BigReal(int)>& value, int d_max, int digits);

/// Continued-fraction convergent with denominator <= den_bound that matches x
/// to 10^{-digits+10}; NotFound otherwise.
Rational recognize_rational(const BigReal& x, int digits, const BigInt& den_bound);

}  // namespace thetaq
