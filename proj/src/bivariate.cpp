#include "thetaq/bivariate.hpp"

#include <sstream>

#include "thetaq/errors.hpp"

namespace thetaq {

BivarIntPoly::BivarIntPoly(Terms terms) {
  for (auto& [m, c] : terms) {
    if (m.first < 0 || m.second < 0) throw DomainError("negative exponent in polynomial");
    if (c != 0) terms_.emplace(m, std::move(c));
  }
  if (terms_.empty()) throw DomainError("the zero polynomial is not a relation");
  BigInt g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (terms_.begin()->second < 0) g = -g;
  for (auto& [m, c] : terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

BivarIntPoly::BivarIntPoly(std::initializer_list<std::tuple<int, int, long>> terms)
    : BivarIntPoly([&] {
        Terms t;
        for (auto [i, j, c] : terms) t[{i, j}] += c;
        return t;
      }()) {}

int BivarIntPoly::degree_u() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BivarIntPoly::degree_v() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

int BivarIntPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

PuiseuxSeries BivarIntPoly::evaluate(const PuiseuxSeries& u, const PuiseuxSeries& v) const {
  std::vector<PuiseuxSeries> up{PuiseuxSeries::constant(1)};
  std::vector<PuiseuxSeries> vp{PuiseuxSeries::constant(1)};
  for (int i = 1; i <= degree_u(); ++i) up.push_back(up.back() * u);
  for (int j = 1; j <= degree_v(); ++j) vp.push_back(vp.back() * v);
  PuiseuxSeries sum;
  for (const auto& [m, c] : terms_) sum += (up[m.first] * vp[m.second]) * Rational(c);
  return sum;
}

BigReal BivarIntPoly::evaluate(const BigReal& u, const BigReal& v) const {
  BigReal sum(std::min(u.digits(), v.digits()));
  for (const auto& [m, c] : terms_) {
    sum += pow(u, static_cast<long>(m.first)) * pow(v, static_cast<long>(m.second)) * Rational(c);
  }
  return sum;
}

BivarIntPoly BivarIntPoly::substitute_u_scale(const Rational& c) const {
  if (sgn(c) == 0) throw DomainError("scale must be nonzero");
  // c_ij (u/c)^i v^j, multiplied through by c^{deg_u}.
  const int du = degree_u();
  std::map<Monomial, Rational> scaled;
  for (const auto& [m, coef] : terms_) {
    Rational f = 1;
    for (int k = m.first; k < du; ++k) f *= c;
    scaled[m] = Rational(coef) * f;
  }
  BigInt den = 1;
  for (const auto& [m, r] : scaled) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  Terms t;
  for (const auto& [m, r] : scaled) {
    Rational x = r * Rational(den);
    t[m] = x.get_num();
  }
  return BivarIntPoly(std::move(t));
}

std::string BivarIntPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = m.first > 0 || m.second > 0;
    bool wrote = false;
    if (mag != 1 || !has_var) {
      os << mag.get_str();
      wrote = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    var("u", m.first);
    var("v", m.second);
  }
  return os.str();
}

}  // namespace thetaq
