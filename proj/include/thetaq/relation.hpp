#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetaq/bigreal.hpp"
#include "thetaq/bivariate.hpp"
#include "thetaq/qseries.hpp"
#include "thetaq/series.hpp"

namespace thetaq {

/// u = A(a,p; q^nome_power)^power.
struct UBinding {
  ThetaSpec spec;
  int power = 1;
  int nome_power = 1;
};

/// The modulus-family variable v paired with u.
enum class VBinding {
  m,             // m(q) = k^2
  sqrt_m,        // k
  m_q2_squared,  // m(q^2)^2 = k_{4r}^4
  eta5_q4_pow5,  // eta5(q^4)^5
  eta5_q2_pow5,  // eta5(q^2)^5
};

std::string to_string(VBinding v);
/// Accepts the canonical names and the CLI short forms (k, m2sq, eta5q4p5, eta5q2p5).
VBinding parse_vbinding(const std::string& name);

/// Series of the bound variables, known for exponents < order.
PuiseuxSeries u_series(const UBinding& u, const Rational& order);
PuiseuxSeries v_series(VBinding v, const Rational& order);
BigReal u_value(const UBinding& u, const BigReal& q, int digits);
BigReal v_value(VBinding v, const BigReal& q, int digits);

/// Dense coefficient matrix: column (i, j) holds the coefficients of u^i v^j.
struct CoeffMatrix {
  std::vector<BivarIntPoly::Monomial> columns;
  std::vector<Rational> row_exponents;
  std::vector<std::vector<Rational>> rows;
};

/// One row per grid exponent carrying a nonzero entry, from the lowest
/// exponent of any u^i v^j upward. Throws DomainError naming the order
/// required when the inputs are truncated too early.
CoeffMatrix build_coeff_matrix(const PuiseuxSeries& u, const PuiseuxSeries& v, int s, int rows);

using IntVector = std::vector<BigInt>;

/// Right kernel by fraction-free (Bareiss) elimination; each basis vector is
/// scaled to coprime integers.
std::vector<IntVector> exact_nullspace(const std::vector<std::vector<Rational>>& matrix);

/// Rank modulo a 61-bit prime; never exceeds the rational rank.
std::size_t modular_rank(const std::vector<std::vector<Rational>>& matrix);

struct RankProfile {
  int s = 0;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
};

struct RelationSearch {
  std::optional<BivarIntPoly> poly;
  int degree = 0;
  std::vector<RankProfile> profile;
  /// Full kernel basis at the accepting degree, for diagnostics.
  std::vector<BivarIntPoly> kernel;
};

/// The interpolation search on given series: for s = 1..s_max take
/// (s+1)^2 + 10 rows and stop at the first nontrivial kernel. Among kernel
/// vectors prefers lowest total degree, then fewest terms, then lex order.
RelationSearch find_relation(const PuiseuxSeries& u, const PuiseuxSeries& v, int s_max);

struct NumericCheck {
  Rational r;
  int digits = 0;
  BigReal residual;
  BigReal tolerance;
};

struct MinedRelation {
  UBinding u;
  VBinding v;
  BivarIntPoly poly;
  int degree = 0;
  Rational matrix_order;
  Rational validated_order;
  std::vector<NumericCheck> numeric_checks;
};

struct ValidationPlan {
  int extra_orders = 25;
  std::vector<Rational> points{Rational(1), Rational(2)};
  int digits = 60;
};

inline constexpr int kMiningGuardOrders = 25;

/// Mines P(u, v) = O(q^M) for the bound series, then validates it.
/// Throws NotFound (with the rank profile) or ValidationFailed.
MinedRelation mine(const UBinding& u, VBinding v, int s_max, const Rational& order,
                   const ValidationPlan& plan = {});

/// Series check on extra_orders more orders plus |P(u(q), v(q))| < 10^{-digits/2}
/// at each point; returns the relation with both checks recorded.
MinedRelation validate(MinedRelation rel, int extra_orders, const std::vector<Rational>& points,
                       int digits);

/// P(u, v) as a series through at least `order`, padding the inputs as needed.
PuiseuxSeries relation_residual_series(const BivarIntPoly& poly, const UBinding& u, VBinding v,
                                       const Rational& order);

/// |P(u(q), v(q))| at q = e^{-pi sqrt(r)}.
BigReal relation_residual_numeric(const BivarIntPoly& poly, const UBinding& u, VBinding v,
                                  const Rational& r, int digits);

}  // namespace thetaq
