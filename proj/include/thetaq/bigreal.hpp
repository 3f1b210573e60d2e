#pragma once

#include <mpfr.h>

#include <string>

#include "thetaq/rational.hpp"

namespace thetaq {

/// Arbitrary-precision real carrying its working precision in decimal digits.
///
/// Binary operations return a value at the smaller of the two operand
/// precisions. The precision floor is 20 digits.
class BigReal {
 public:
  static constexpr int kMinDigits = 20;

  explicit BigReal(int digits = kMinDigits);
  BigReal(long value, int digits);
  BigReal(const Rational& value, int digits);
  BigReal(const std::string& decimal, int digits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  /// Same value re-rounded to a different precision.
  BigReal with_digits(int digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const Rational& b);
  friend BigReal operator+(const BigReal& a, const Rational& b);
  friend BigReal operator-(const BigReal& a, const Rational& b);
  friend BigReal operator/(const BigReal& a, const Rational& b);

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.value_, b.value_); }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal rendering with `shown` significant digits (default: digits()).
  std::string to_string(int shown = 0) const;
  /// Short scientific form such as "1.3e-52", used in reports.
  std::string to_sci(int shown = 2) const;

  static mpfr_prec_t bits_for(int digits);

 private:
  int digits_;
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
/// x^e for x > 0 (principal real branch).
BigReal pow(const BigReal& x, const Rational& e);
BigReal pow(const BigReal& x, long n);
BigReal pi(int digits);
/// 10^e at the given precision.
BigReal pow10(long e, int digits);

}  // namespace thetaq
