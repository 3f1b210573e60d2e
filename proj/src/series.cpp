#include "thetaq/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

using Index = PuiseuxSeries::Index;
constexpr Index kExact = PuiseuxSeries::kExact;

Index index_of(const Rational& e, Index denom) {
  Rational scaled = e * Rational(BigInt(std::to_string(denom)));
  if (scaled.get_den() != 1) throw DomainError("exponent not on the series grid");
  return to_int64(scaled.get_num());
}

Index grid_for(const Rational& e) { return to_int64(e.get_den()); }

Index bound_min(Index a, Index b) { return std::min(a, b); }

Index add_bound(Index hi, Index shift) { return hi == kExact ? kExact : hi + shift; }

// Coefficients of u on the arithmetic progression base + j*step (j < n),
// where step divides every (key - base) and (hi - base).
struct Strided {
  Index base = 0;
  Index step = 1;
  Index count = 0;
  std::vector<Rational> t;
};

Strided stride(const PuiseuxSeries& u, Index base) {
  Strided s;
  s.base = base;
  Index g = u.hi() - base;
  for (const auto& [k, c] : u.terms()) g = gcd64(g, k - base);
  if (g <= 0) g = 1;
  s.step = g;
  s.count = (u.hi() - base) / g;
  s.t.assign(static_cast<std::size_t>(s.count), Rational(0));
  for (const auto& [k, c] : u.terms()) {
    Index j = (k - base) / g;
    if (j < s.count) s.t[static_cast<std::size_t>(j)] = c;
  }
  return s;
}

std::vector<std::size_t> nonzero_positions(const std::vector<Rational>& t, std::size_t from) {
  std::vector<std::size_t> nz;
  for (std::size_t j = from; j < t.size(); ++j) {
    if (sgn(t[j]) != 0) nz.push_back(j);
  }
  return nz;
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(Index denom, Terms terms, Index hi)
    : denom_(denom), hi_(hi), terms_(std::move(terms)) {
  if (denom_ < 1) throw DomainError("series grid denominator must be >= 1");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first >= hi_) throw DomainError("series term at or beyond its truncation bound");
    if (sgn(it->second) == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  normalize();
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) {
  Terms t;
  t.emplace(0, c);
  return PuiseuxSeries(1, std::move(t));
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, const Rational& exponent) {
  Index n = grid_for(exponent);
  Terms t;
  t.emplace(index_of(exponent, n), c);
  return PuiseuxSeries(n, std::move(t));
}

void PuiseuxSeries::normalize() {
  Index g = denom_;
  if (hi_ != kExact) g = gcd64(g, hi_);
  for (const auto& [k, c] : terms_) {
    if (g == 1) break;
    g = gcd64(g, k);
  }
  if (g <= 1) return;
  Terms scaled;
  for (auto& [k, c] : terms_) scaled.emplace_hint(scaled.end(), k / g, std::move(c));
  terms_ = std::move(scaled);
  denom_ /= g;
  if (hi_ != kExact) hi_ /= g;
}

PuiseuxSeries PuiseuxSeries::rebased(Index new_denom) const {
  if (new_denom % denom_ != 0) throw DomainError("rebase target must refine the grid");
  Index f = new_denom / denom_;
  PuiseuxSeries out;
  out.denom_ = new_denom;
  out.hi_ = hi_ == kExact ? kExact : hi_ * f;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k * f, c);
  return out;
}

Index PuiseuxSeries::lo() const { return terms_.empty() ? hi_ : terms_.begin()->first; }

Rational PuiseuxSeries::order() const {
  if (is_exact()) throw DomainError("exact series has no truncation order");
  return make_rational(hi_, denom_);
}

Rational PuiseuxSeries::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero series has no leading term");
  return make_rational(terms_.begin()->first, denom_);
}

const Rational& PuiseuxSeries::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero series has no leading term");
  return terms_.begin()->second;
}

Rational PuiseuxSeries::coefficient(const Rational& e) const {
  if (!is_exact() && e >= order()) {
    throw DomainError("coefficient requested at or beyond the truncation order");
  }
  Rational scaled = e * Rational(BigInt(std::to_string(denom_)));
  if (scaled.get_den() != 1) return Rational(0);
  auto it = terms_.find(to_int64(scaled.get_num()));
  return it == terms_.end() ? Rational(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  Index n = lcm64(denom_, grid_for(order));
  PuiseuxSeries out = rebased(n);
  Index bound = to_int64(thetaq::ceil(order * Rational(BigInt(std::to_string(n)))));
  if (bound < out.hi_) {
    out.hi_ = bound;
    out.terms_.erase(out.terms_.lower_bound(bound), out.terms_.end());
  }
  out.normalize();
  return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& rhs) {
  Index n = lcm64(denom_, rhs.denom_);
  PuiseuxSeries a = rebased(n);
  PuiseuxSeries b = rhs.rebased(n);
  a.hi_ = bound_min(a.hi_, b.hi_);
  a.terms_.erase(a.terms_.lower_bound(a.hi_), a.terms_.end());
  for (const auto& [k, c] : b.terms_) {
    if (k >= a.hi_) break;
    auto [it, inserted] = a.terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) a.terms_.erase(it);
    }
  }
  a.normalize();
  *this = std::move(a);
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& rhs) { return *this += -rhs; }

PuiseuxSeries& PuiseuxSeries::operator*=(const PuiseuxSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [k, v] : terms_) v *= c;
  }
  normalize();
  return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries& lhs, const PuiseuxSeries& rhs) {
  if ((lhs.is_exact() && lhs.is_zero()) || (rhs.is_exact() && rhs.is_zero())) {
    return PuiseuxSeries();
  }
  Index n = lcm64(lhs.denom_, rhs.denom_);
  PuiseuxSeries a = lhs.rebased(n);
  PuiseuxSeries b = rhs.rebased(n);

  // u = O(q^hi_u) unknown part meets v from its lowest term, and vice versa.
  Index hi = kExact;
  if (!a.is_exact()) hi = std::min(hi, a.hi_ + b.lo());
  if (!b.is_exact()) hi = std::min(hi, b.hi_ + a.lo());

  std::vector<std::pair<Index, const Rational*>> bv;
  bv.reserve(b.terms_.size());
  for (const auto& [k, c] : b.terms_) bv.emplace_back(k, &c);

  PuiseuxSeries out;
  out.denom_ = n;
  out.hi_ = hi;
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : bv) {
      Index k = ka + kb;
      if (k >= hi) break;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb->get_mpq_t());
      auto [it, inserted] = out.terms_.try_emplace(k, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = sgn(it->second) == 0 ? out.terms_.erase(it) : std::next(it);
  }
  out.normalize();
  return out;
}

PuiseuxSeries PuiseuxSeries::mul_monomial(const Rational& c, const Rational& alpha) const {
  Index n = lcm64(denom_, grid_for(alpha));
  PuiseuxSeries out = rebased(n);
  Index shift = index_of(alpha, n);
  Terms moved;
  for (auto& [k, v] : out.terms_) moved.emplace_hint(moved.end(), k + shift, v * c);
  out.terms_ = std::move(moved);
  out.hi_ = add_bound(out.hi_, shift);
  if (sgn(c) == 0) out.terms_.clear();
  out.normalize();
  return out;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a.denom_ == b.denom_ && a.hi_ == b.hi_ && a.terms_ == b.terms_;
}

std::string PuiseuxSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (const auto& [k, c] : terms_) {
    if (shown == max_terms) {
      os << " + ...";
      break;
    }
    if (shown > 0) os << " + ";
    os << "(" << thetaq::to_string(c) << ")*q^(" << thetaq::to_string(make_rational(k, denom_))
       << ")";
    ++shown;
  }
  if (shown == 0) os << "0";
  if (!is_exact()) os << " + O(q^(" << thetaq::to_string(order()) << "))";
  return os.str();
}

PuiseuxSeries pow(const PuiseuxSeries& u, std::int64_t n) {
  if (n < 0) return pow(invert_unit(u), -n);
  PuiseuxSeries result = PuiseuxSeries::constant(1);
  PuiseuxSeries base = u;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries invert_unit(const PuiseuxSeries& u) {
  if (u.is_zero()) throw DomainError("cannot invert a series that vanishes to its bound");
  const Index lo = u.lo();
  const Rational c0 = u.leading_coefficient();
  if (u.is_exact()) {
    if (u.terms().size() == 1) {
      return PuiseuxSeries::monomial(1 / c0, -u.leading_exponent());
    }
    throw DomainError("truncate an exact polynomial before inverting it");
  }

  Strided s = stride(u, lo);
  std::vector<Rational> b(static_cast<std::size_t>(s.count));
  const Rational inv0 = 1 / c0;
  auto nz = nonzero_positions(s.t, 1);
  b[0] = inv0;
  Rational acc, prod;
  for (std::size_t n = 1; n < b.size(); ++n) {
    acc = 0;
    for (std::size_t j : nz) {
      if (j > n) break;
      mpq_mul(prod.get_mpq_t(), s.t[j].get_mpq_t(), b[n - j].get_mpq_t());
      acc += prod;
    }
    b[n] = -acc * inv0;
  }

  PuiseuxSeries::Terms terms;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (sgn(b[j]) != 0) terms.emplace_hint(terms.end(), -lo + static_cast<Index>(j) * s.step, b[j]);
  }
  return PuiseuxSeries(u.denom(), std::move(terms), u.hi() - 2 * lo);
}

PuiseuxSeries exp_series(const PuiseuxSeries& u) {
  if (u.is_zero()) {
    if (u.is_exact()) return PuiseuxSeries::constant(1);
    PuiseuxSeries::Terms one;
    one.emplace(0, Rational(1));
    return PuiseuxSeries(u.denom(), std::move(one), u.hi() > 0 ? u.hi() : 1);
  }
  if (u.lo() <= 0) throw DomainError("exp_series needs a series with positive valuation");
  if (u.is_exact()) throw DomainError("truncate an exact polynomial before exp_series");

  // e' = u' e on the stride grid: n e_n = sum_j j t_j e_{n-j}.
  Strided s = stride(u, 0);
  std::vector<Rational> e(static_cast<std::size_t>(s.count));
  auto nz = nonzero_positions(s.t, 1);
  e[0] = 1;
  Rational acc, prod;
  for (std::size_t n = 1; n < e.size(); ++n) {
    acc = 0;
    for (std::size_t j : nz) {
      if (j > n) break;
      mpq_mul(prod.get_mpq_t(), s.t[j].get_mpq_t(), e[n - j].get_mpq_t());
      acc += prod * static_cast<long>(j);
    }
    e[n] = acc / static_cast<long>(n);
  }
  PuiseuxSeries::Terms terms;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (sgn(e[j]) != 0) terms.emplace_hint(terms.end(), static_cast<Index>(j) * s.step, e[j]);
  }
  return PuiseuxSeries(u.denom(), std::move(terms), u.hi());
}

PuiseuxSeries sqrt_series(const PuiseuxSeries& u) {
  if (u.is_zero()) throw DomainError("sqrt_series of a series that vanishes to its bound");
  const Rational c0 = u.leading_coefficient();
  Rational root;
  if (!rational_sqrt(c0, root)) {
    throw DomainError("leading coefficient " + to_string(c0) + " is not a rational square");
  }
  const Index lo = u.lo();

  if (u.is_exact()) {
    // Exact input: accept only if the square root terminates.
    if (u.terms().size() == 1) {
      return PuiseuxSeries::monomial(root, u.leading_exponent() / 2);
    }
    const Rational top = make_rational(u.terms().rbegin()->first, u.denom());
    PuiseuxSeries trial = sqrt_series(u.truncated(top + 1));
    PuiseuxSeries::Terms kept;
    for (const auto& [k, c] : trial.terms()) {
      if (make_rational(k, trial.denom()) <= top / 2) kept.emplace(k, c);
    }
    PuiseuxSeries poly(trial.denom(), std::move(kept));
    if (poly * poly == u) return poly;
    throw DomainError("exact polynomial is not a perfect square; truncate it first");
  }

  Strided s = stride(u, lo);
  std::vector<Rational> r(static_cast<std::size_t>(s.count));
  const Rational c0inv = 1 / c0;
  r[0] = 1;
  Rational acc, prod;
  // Normalized t/c0 = 1 + ...; r^2 = t/c0.
  std::vector<Rational> t(s.t.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = s.t[j] * c0inv;
  for (std::size_t n = 1; n < r.size(); ++n) {
    acc = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (sgn(r[j]) == 0 || sgn(r[n - j]) == 0) continue;
      mpq_mul(prod.get_mpq_t(), r[j].get_mpq_t(), r[n - j].get_mpq_t());
      acc += prod;
    }
    r[n] = (t[n] - acc) / 2;
  }
  // Result grid is 2*denom: exponent lo/(2N) + j*step/N.
  PuiseuxSeries::Terms terms;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (sgn(r[j]) != 0) {
      terms.emplace_hint(terms.end(), lo + 2 * static_cast<Index>(j) * s.step, r[j] * root);
    }
  }
  return PuiseuxSeries(2 * u.denom(), std::move(terms), 2 * u.hi() - lo);
}

PuiseuxSeries rescale(const PuiseuxSeries& u, const Rational& s) {
  if (sgn(s) <= 0) throw DomainError("rescale factor must be positive");
  Index num = to_int64(s.get_num());
  Index den = to_int64(s.get_den());
  PuiseuxSeries::Terms terms;
  for (const auto& [k, c] : u.terms()) terms.emplace_hint(terms.end(), k * num, c);
  Index hi = u.is_exact() ? PuiseuxSeries::kExact : u.hi() * num;
  return PuiseuxSeries(u.denom() * den, std::move(terms), hi);
}

bool equal_through(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& order) {
  if (!a.is_exact() && a.order() < order) return false;
  if (!b.is_exact() && b.order() < order) return false;
  PuiseuxSeries diff = (a - b).truncated(order);
  return diff.is_zero();
}

Rational vanishing_order(const PuiseuxSeries& u) {
  if (!u.is_zero()) return u.leading_exponent();
  return u.order();
}

}  // namespace thetaq
