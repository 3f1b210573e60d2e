#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thetaq/bigreal.hpp"
#include "thetaq/rational.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// Integer polynomial P(u, v) = sum c_ij u^i v^j.
///
/// Always normalized: no zero coefficients, content 1, and the first term in
/// ascending (i, j) order has a positive coefficient.
class BivarIntPoly {
 public:
  using Monomial = std::pair<int, int>;
  using Terms = std::map<Monomial, BigInt>;

  /// Throws DomainError for the zero polynomial or negative exponents.
  explicit BivarIntPoly(Terms terms);
  BivarIntPoly(std::initializer_list<std::tuple<int, int, long>> terms);

  const Terms& terms() const { return terms_; }
  int degree_u() const;
  int degree_v() const;
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  /// P(u, v) on series (powers computed once per variable).
  PuiseuxSeries evaluate(const PuiseuxSeries& u, const PuiseuxSeries& v) const;
  BigReal evaluate(const BigReal& u, const BigReal& v) const;

  /// Polynomial of P(u / c, v) after clearing denominators and normalizing.
  BivarIntPoly substitute_u_scale(const Rational& c) const;

  /// Human-readable form, highest monomials first, e.g. "u^2*v + 16*v - 16".
  std::string to_string() const;

  friend bool operator==(const BivarIntPoly&, const BivarIntPoly&) = default;

 private:
  Terms terms_;
};

}  // namespace thetaq
