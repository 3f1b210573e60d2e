#include "thetaq/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

int checked(int digits) {
  if (digits < BigReal::kMinDigits) {
    throw DomainError("precision below the " + std::to_string(BigReal::kMinDigits) + "-digit floor");
  }
  return digits;
}

}  // namespace

mpfr_prec_t BigReal::bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigReal::BigReal(int digits) : digits_(checked(digits)) {
  mpfr_init2(value_, bits_for(digits_));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigReal::BigReal(const Rational& value, int digits) : BigReal(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, int digits) : BigReal(digits) {
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("malformed decimal '" + decimal + "'");
  }
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_digits(int digits) const {
  BigReal out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

BigReal BigReal::operator-() const {
  BigReal out(digits_);
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

#define THETAQ_BINOP(op, fn)                                     \
  BigReal operator op(const BigReal& a, const BigReal& b) {      \
    BigReal out(std::min(a.digits_, b.digits_));                 \
    fn(out.value_, a.value_, b.value_, MPFR_RNDN);               \
    return out;                                                  \
  }
THETAQ_BINOP(+, mpfr_add)
THETAQ_BINOP(-, mpfr_sub)
THETAQ_BINOP(*, mpfr_mul)
THETAQ_BINOP(/, mpfr_div)
#undef THETAQ_BINOP

BigReal operator*(const BigReal& a, const Rational& b) {
  BigReal out(a.digits_);
  mpfr_mul_q(out.value_, a.value_, b.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, const Rational& b) {
  BigReal out(a.digits_);
  mpfr_add_q(out.value_, a.value_, b.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const Rational& b) {
  BigReal out(a.digits_);
  mpfr_sub_q(out.value_, a.value_, b.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const Rational& b) {
  BigReal out(a.digits_);
  mpfr_div_q(out.value_, a.value_, b.get_mpq_t(), MPFR_RNDN);
  return out;
}

std::string BigReal::to_string(int shown) const {
  if (shown <= 0) shown = digits_;
  if (mpfr_zero_p(value_)) return "0";
  std::vector<char> buf(static_cast<std::size_t>(shown) + 64);
  // Fixed notation for moderate magnitudes, scientific otherwise.
  const long exp10 = mpfr_zero_p(value_) ? 0 : static_cast<long>(std::floor(
                                                 mpfr_get_exp(value_) * 0.30102999566398120));
  if (exp10 > -6 && exp10 < shown) {
    int decimals = std::max(0, shown - 1 - static_cast<int>(std::max(0L, exp10)));
    int need = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, value_);
    buf.resize(static_cast<std::size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
  } else {
    int need = mpfr_snprintf(nullptr, 0, "%.*Re", shown - 1, value_);
    buf.resize(static_cast<std::size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", shown - 1, value_);
  }
  return std::string(buf.data());
}

std::string BigReal::to_sci(int shown) const {
  if (mpfr_zero_p(value_)) return "0";
  int need = mpfr_snprintf(nullptr, 0, "%.*Re", shown - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", shown - 1, value_);
  // Compact the exponent: 1.3e-052 -> 1.3e-52.
  std::string s(buf.data());
  auto e = s.find('e');
  if (e != std::string::npos && e + 2 < s.size()) {
    std::size_t d = e + 2;
    while (d + 1 < s.size() && s[d] == '0') s.erase(d, 1);
    if (s[e + 1] == '+') s.erase(e + 1, 1);
  }
  return s;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.digits());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative value");
  BigReal out(x.digits());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.digits());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive value");
  BigReal out(x.digits());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of a non-positive value");
  BigReal out(x.digits());
  mpfr_log10(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, const Rational& e) {
  if (e.get_den() == 1 && mpz_fits_slong_p(e.get_num_mpz_t())) {
    return pow(x, mpz_get_si(e.get_num_mpz_t()));
  }
  if (x.sign() < 0) throw DomainError("fractional power of a negative value");
  if (x.is_zero()) {
    if (sgn(e) < 0) throw DomainError("negative power of zero");
    return BigReal(x.digits());
  }
  // Exact root first, then the integer power: keeps x^(1/n) correctly rounded.
  BigReal root(x.digits());
  if (mpz_fits_ulong_p(e.get_den_mpz_t())) {
    mpfr_rootn_ui(root.get(), x.get(), mpz_get_ui(e.get_den_mpz_t()), MPFR_RNDN);
    return pow(root, mpz_get_si(e.get_num_mpz_t()));
  }
  BigReal ee(e, x.digits());
  mpfr_pow(root.get(), x.get(), ee.get(), MPFR_RNDN);
  return root;
}

BigReal pow(const BigReal& x, long n) {
  BigReal out(x.digits());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigReal pi(int digits) {
  BigReal out(digits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

BigReal pow10(long e, int digits) {
  BigReal out(10L, digits);
  mpfr_pow_si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

}  // namespace thetaq
