#include "thetaq/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "thetaq/errors.hpp"
#include "thetaq/numeric.hpp"

namespace thetaq {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("IntPoly: zero polynomial");
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (coeffs_.back() < 0) g = -g;
  for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
    : IntPoly(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

BigReal IntPoly::evaluate(const BigReal& x) const {
  BigReal acc(0L, x.digits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::size_t IntPoly::height_digits() const {
  std::size_t h = 1;
  for (const auto& c : coeffs_) h = std::max(h, BigInt(abs(c)).get_str().size());
  return h;
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d > 0) {
      if (mag != 1) os << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

bool divides(const IntPoly& a, const IntPoly& b) {
  if (a.degree() > b.degree()) return false;
  std::vector<Rational> rem;
  for (const auto& c : b.coeffs()) rem.emplace_back(c);
  const Rational lead(a.coeffs().back());
  for (int d = b.degree(); d >= a.degree(); --d) {
    Rational f = rem[d] / lead;
    if (sgn(f) == 0) continue;
    for (int i = 0; i <= a.degree(); ++i) rem[d - a.degree() + i] -= f * Rational(a.coeffs()[i]);
  }
  return std::all_of(rem.begin(), rem.end(), [](const Rational& r) { return sgn(r) == 0; });
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> star;
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> norm;
};

GramSchmidt gram_schmidt(const std::vector<std::vector<BigInt>>& b) {
  const std::size_t n = b.size();
  GramSchmidt gs;
  gs.star.resize(n);
  gs.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  gs.norm.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> bi(b[i].begin(), b[i].end());
    gs.star[i] = bi;
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(gs.norm[j]) == 0) continue;
      gs.mu[i][j] = dot(bi, gs.star[j]) / gs.norm[j];
      for (std::size_t t = 0; t < bi.size(); ++t) gs.star[i][t] -= gs.mu[i][j] * gs.star[j][t];
    }
    gs.norm[i] = dot(gs.star[i], gs.star[i]);
  }
  return gs;
}

BigInt round_rational(const Rational& x) {
  Rational y = x + Rational(1, 2);
  return floor(y);
}

void size_reduce(std::vector<std::vector<BigInt>>& b, GramSchmidt& gs, std::size_t k, std::size_t j) {
  BigInt q = round_rational(gs.mu[k][j]);
  if (q == 0) return;
  for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
  const Rational qr(q);
  for (std::size_t i = 0; i < j; ++i) gs.mu[k][i] -= qr * gs.mu[j][i];
  gs.mu[k][j] -= qr;
}

BigInt round_to_int(const BigReal& x) {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
  return z;
}

struct Candidate {
  std::optional<IntPoly> poly;
  std::string miss;  // which bound rejected the best vector, for diagnostics
};

bool passes(const IntPoly& p, const BigReal& x, int digits, std::string* why) {
  const double cap = 0.3 * digits;
  if (static_cast<double>(p.height_digits()) > cap) {
    if (why) *why = "coefficient cap (" + std::to_string(p.height_digits()) + " digits)";
    return false;
  }
  const BigReal tol = pow10(-static_cast<long>(std::ceil(0.6 * digits)), x.digits());
  if (!(abs(p.evaluate(x)) < tol)) {
    if (why) *why = "residual threshold";
    return false;
  }
  return true;
}

Candidate search_degree(const BigReal& x, int d, int digits) {
  const int work = digits + kGuardDigits;
  const BigReal scale = pow10(digits, work);
  std::vector<std::vector<BigInt>> basis;
  BigReal power(1L, work);
  const BigReal xw = x.with_digits(work);
  for (int i = 0; i <= d; ++i) {
    std::vector<BigInt> row(d + 2, BigInt(0));
    row[i] = 1;
    row[d + 1] = round_to_int(power * scale);
    basis.push_back(std::move(row));
    power = power * xw;
  }
  auto reduced = lll_reduce(std::move(basis));
  Candidate out;
  for (const auto& v : reduced) {
    std::vector<BigInt> c(v.begin(), v.begin() + d + 1);
    if (std::all_of(c.begin(), c.end(), [](const BigInt& z) { return z == 0; })) continue;
    IntPoly p(c);
    if (p.degree() < 1) continue;
    std::string why;
    if (passes(p, x, digits, &why)) {
      out.poly = p;
      return out;
    }
    if (out.miss.empty()) out.miss = why;
  }
  return out;
}

IntPoly recognize_impl(const BigReal& x, const BigReal& x2, int d_max, int digits) {
  if (d_max < 1) throw DomainError("recognize needs d_max >= 1");
  if (digits < 10) throw DomainError("recognize needs at least 10 digits");
  std::string last_miss;
  for (int d = 1; d <= d_max; ++d) {
    Candidate c = search_degree(x, d, digits);
    if (!c.poly) {
      if (!c.miss.empty()) last_miss = c.miss;
      continue;
    }
    const int check_digits = std::min(2 * digits, x2.digits());
    const BigReal tol = pow10(-static_cast<long>(std::ceil(0.6 * check_digits)), x2.digits());
    if (abs(c.poly->evaluate(x2)) < tol) return *c.poly;
    last_miss = "re-certification at " + std::to_string(check_digits) + " digits";
  }
  std::ostringstream os;
  os << "no algebraic relation up to degree " << d_max << " at " << digits << " digits";
  if (!last_miss.empty()) os << "; best candidate rejected by " << last_miss;
  else os << "; no short lattice vector (degree bound or precision too small)";
  throw NotFound(os.str());
}

}  // namespace

std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> b) {
  const std::size_t n = b.size();
  if (n < 2) return b;
  const Rational delta(99, 100);
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    size_reduce(b, gs, k, k - 1);
    const Rational m = gs.mu[k][k - 1];
    if (gs.norm[k] < (delta - m * m) * gs.norm[k - 1]) {
      // Swap b_k, b_{k-1} and update mu, B in place.
      std::swap(b[k], b[k - 1]);
      const Rational bnew = gs.norm[k] + m * m * gs.norm[k - 1];
      const Rational mk = m * gs.norm[k - 1] / bnew;
      gs.norm[k] = gs.norm[k - 1] * gs.norm[k] / bnew;
      gs.norm[k - 1] = bnew;
      gs.mu[k][k - 1] = mk;
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(gs.mu[k][j], gs.mu[k - 1][j]);
      for (std::size_t i = k + 1; i < n; ++i) {
        const Rational t = gs.mu[i][k];
        gs.mu[i][k] = gs.mu[i][k - 1] - m * t;
        gs.mu[i][k - 1] = t + mk * gs.mu[i][k];
      }
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(b, gs, k, j);
      ++k;
    }
  }
  return b;
}

IntPoly recognize(const BigReal& x, int d_max, int digits) {
  return recognize_impl(x, x, d_max, digits);
}

IntPoly recognize(const std::function<BigReal(int)>& value, int d_max, int digits) {
  return recognize_impl(value(digits), value(2 * digits), d_max, digits);
}

Rational recognize_rational(const BigReal& x, int digits, const BigInt& den_bound) {
  const int work = std::max(digits, x.digits()) + kGuardDigits;
  const BigReal tol = tolerance(digits) * (abs(x) + Rational(1));
  BigReal y = x.with_digits(work);
  // Convergents h/k via the standard recurrence.
  BigInt h_prev = 1, h = 0, k_prev = 0, k = 1;
  for (int step = 0; step < 4 * work; ++step) {
    BigInt a;
    mpfr_get_z(a.get_mpz_t(), y.get(), MPFR_RNDD);
    BigInt h_next = a * h_prev + h;
    BigInt k_next = a * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    if (k_prev > den_bound) break;
    Rational c(h_prev, k_prev);
    c.canonicalize();
    if (abs(x - c) < tol) return c;
    BigReal frac = y - Rational(a);
    if (frac.is_zero()) break;
    y = BigReal(1L, work) / frac;
  }
  throw NotFound("no rational with denominator <= " + den_bound.get_str() + " matches to " +
                 tol.to_sci());
}

}  // namespace thetaq
