#include "thetaq/relation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "thetaq/errors.hpp"
#include "thetaq/numeric.hpp"

namespace thetaq {

namespace {

using Index = PuiseuxSeries::Index;

// pow(base(O), e) known below `order`; pads O when the base has a negative
// leading exponent (the unknown tail meets the most negative partner).
PuiseuxSeries power_to_order(const std::function<PuiseuxSeries(const Rational&)>& base, long e,
                             const Rational& order) {
  PuiseuxSeries b = base(order);
  if (b.is_zero() || e == 1) return pow(b, e).truncated(order);
  const Rational lead = b.leading_exponent();
  const Rational need = order - Rational(e - 1) * lead;
  if (need > order) b = base(need);
  return pow(b, e).truncated(order);
}

PuiseuxSeries rescaled(const std::function<PuiseuxSeries(const Rational&)>& f, long s,
                       const Rational& order) {
  return rescale(f(order / s), s);
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const BigInt& x) {
  BigInt m;
  static const BigInt p(std::to_string(kPrime));
  mpz_fdiv_r(m.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return mpz_get_ui(m.get_mpz_t());
}

// Integer rows with content 1 (each row scaled independently).
std::vector<std::vector<BigInt>> integer_rows(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    BigInt den = 1;
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> ir(row.size());
    BigInt g = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      Rational s = row[j] * Rational(den);
      ir[j] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ir[j].get_mpz_t());
    }
    if (g > 1) {
      for (auto& x : ir) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    out.push_back(std::move(ir));
  }
  return out;
}

IntVector primitive(const std::vector<Rational>& x) {
  BigInt den = 1;
  for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  IntVector out(x.size());
  BigInt g = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational s = x[j] * Rational(den);
    out[j] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
  }
  if (g == 0) return out;
  // Sign: first nonzero entry positive.
  for (const auto& v : out) {
    if (v != 0) {
      if (v < 0) g = -g;
      break;
    }
  }
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::string profile_text(const std::vector<RankProfile>& profile) {
  std::ostringstream os;
  for (const auto& p : profile) {
    os << " s=" << p.s << ": rank " << p.rank << "/" << p.columns << " (" << p.rows << " rows);";
  }
  return os.str();
}

BivarIntPoly poly_from_vector(const std::vector<BivarIntPoly::Monomial>& cols, const IntVector& x) {
  BivarIntPoly::Terms t;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (x[j] != 0) t[cols[j]] = x[j];
  }
  return BivarIntPoly(std::move(t));
}

bool simpler(const BivarIntPoly& a, const BivarIntPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  return a.terms() < b.terms();
}

// Echelon form of the kernel basis with columns taken from the most complex
// monomial downwards: each row then has a distinct leading monomial and the
// row with the smallest one has the least total degree in the kernel.
std::vector<BivarIntPoly> canonical_kernel(const std::vector<BivarIntPoly::Monomial>& cols,
                                           const std::vector<IntVector>& basis) {
  std::vector<std::size_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto kx = std::make_tuple(cols[x].first + cols[x].second, cols[x].first, cols[x].second);
    auto ky = std::make_tuple(cols[y].first + cols[y].second, cols[y].first, cols[y].second);
    return kx > ky;
  });

  std::vector<std::vector<Rational>> m;
  for (const auto& v : basis) {
    std::vector<Rational> row(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) row[j] = Rational(v[order[j]]);
    m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols.size(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }

  std::vector<BivarIntPoly> out;
  for (const auto& row : m) {
    std::vector<Rational> back(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) back[order[j]] = row[j];
    IntVector iv = primitive(back);
    if (std::any_of(iv.begin(), iv.end(), [](const BigInt& x) { return x != 0; })) {
      out.push_back(poly_from_vector(cols, iv));
    }
  }
  return out;
}

}  // namespace

std::string to_string(VBinding v) {
  switch (v) {
    case VBinding::m:
      return "m";
    case VBinding::sqrt_m:
      return "sqrt_m";
    case VBinding::m_q2_squared:
      return "m_q2_squared";
    case VBinding::eta5_q4_pow5:
      return "eta5_q4_pow5";
    case VBinding::eta5_q2_pow5:
      return "eta5_q2_pow5";
  }
  return "?";
}

VBinding parse_vbinding(const std::string& name) {
  if (name == "m") return VBinding::m;
  if (name == "sqrt_m" || name == "k") return VBinding::sqrt_m;
  if (name == "m_q2_squared" || name == "m2sq") return VBinding::m_q2_squared;
  if (name == "eta5_q4_pow5" || name == "eta5q4p5") return VBinding::eta5_q4_pow5;
  if (name == "eta5_q2_pow5" || name == "eta5q2p5") return VBinding::eta5_q2_pow5;
  throw DomainError("unknown v binding '" + name + "'");
}

PuiseuxSeries u_series(const UBinding& u, const Rational& order) {
  if (u.power < 1 || u.nome_power < 1) throw DomainError("u binding needs positive power and nome power");
  auto base = [&](const Rational& o) {
    return rescaled([&](const Rational& oo) { return A_series(u.spec, oo); }, u.nome_power, o);
  };
  return power_to_order(base, u.power, order);
}

PuiseuxSeries v_series(VBinding v, const Rational& order) {
  switch (v) {
    case VBinding::m:
      return modulus_series(order);
    case VBinding::sqrt_m:
      return sqrt_series(modulus_series(order + Rational(1, 2))).truncated(order);
    case VBinding::m_q2_squared:
      return power_to_order(
          [](const Rational& o) { return rescaled([](const Rational& oo) { return modulus_series(oo); }, 2, o); },
          2, order);
    case VBinding::eta5_q4_pow5:
      return power_to_order(
          [](const Rational& o) { return rescaled([](const Rational& oo) { return eta5_series(oo); }, 4, o); },
          5, order);
    case VBinding::eta5_q2_pow5:
      return power_to_order(
          [](const Rational& o) { return rescaled([](const Rational& oo) { return eta5_series(oo); }, 2, o); },
          5, order);
  }
  throw DomainError("unknown v binding");
}

BigReal u_value(const UBinding& u, const BigReal& q, int digits) {
  const int work = digits + kGuardDigits;
  BigReal x = pow(q.with_digits(work), static_cast<long>(u.nome_power));
  return pow(eval_A(u.spec, x, work), static_cast<long>(u.power)).with_digits(digits);
}

namespace {

BigReal eta5_value(const BigReal& x, int work) {
  BigReal h = eval_eta(Rational(1, 5), x, work) /
              (pow(x, Rational(1, 5)) * eval_eta(5, x, work));
  BigReal radicand = h * h + h * Rational(2) + Rational(5);
  return (sqrt(radicand) - h - Rational(1)) * Rational(1, 2);
}

}  // namespace

BigReal v_value(VBinding v, const BigReal& q, int digits) {
  const int work = digits + kGuardDigits;
  const BigReal qq = q.with_digits(work);
  switch (v) {
    case VBinding::m: {
      auto pt = point_from_nome(qq, work);
      return (pt.k * pt.k).with_digits(digits);
    }
    case VBinding::sqrt_m:
      return point_from_nome(qq, work).k.with_digits(digits);
    case VBinding::m_q2_squared: {
      auto pt = point_from_nome(qq * qq, work);
      return pow(pt.k, 4L).with_digits(digits);
    }
    case VBinding::eta5_q4_pow5:
      return pow(eta5_value(pow(qq, 4L), work), 5L).with_digits(digits);
    case VBinding::eta5_q2_pow5:
      return pow(eta5_value(qq * qq, work), 5L).with_digits(digits);
  }
  throw DomainError("unknown v binding");
}

namespace {

// rows < 0: every row below the shared truncation bound, at least -rows of them.
CoeffMatrix build_matrix(const PuiseuxSeries& u, const PuiseuxSeries& v, int s, int rows) {
  const bool all = rows < 0;
  if (all) rows = -rows;
  std::vector<PuiseuxSeries> up{PuiseuxSeries::constant(1)};
  std::vector<PuiseuxSeries> vp{PuiseuxSeries::constant(1)};
  for (int i = 1; i <= s; ++i) up.push_back(up.back() * u);
  for (int j = 1; j <= s; ++j) vp.push_back(vp.back() * v);

  CoeffMatrix cm;
  std::vector<PuiseuxSeries> prods;
  Index denom = 1;
  for (int i = 0; i <= s; ++i) {
    for (int j = 0; j <= s; ++j) {
      cm.columns.emplace_back(i, j);
      prods.push_back(up[i] * vp[j]);
      denom = lcm64(denom, prods.back().denom());
    }
  }

  // Known bound shared by every column, and the union of exponents in use.
  std::optional<Rational> bound;
  std::map<Index, bool> keys;
  for (auto& p : prods) {
    if (!p.is_exact()) bound = bound ? std::min(*bound, p.order()) : p.order();
    PuiseuxSeries r = p.rebased(denom);
    p = r;
    for (const auto& [k, c] : r.terms()) keys.emplace(k, true);
  }

  for (const auto& [k, flag] : keys) {
    if (!all && static_cast<int>(cm.row_exponents.size()) == rows) break;
    Rational e = make_rational(k, denom);
    if (bound && e >= *bound) break;
    std::vector<Rational> row;
    row.reserve(prods.size());
    for (const auto& p : prods) {
      auto it = p.terms().find(k);
      row.push_back(it == p.terms().end() ? Rational(0) : it->second);
    }
    cm.row_exponents.push_back(e);
    cm.rows.push_back(std::move(row));
  }

  if (bound && static_cast<int>(cm.rows.size()) < rows) {
    const Rational last = cm.row_exponents.empty() ? *bound : cm.row_exponents.back();
    const Rational deficit = make_rational(rows - static_cast<long>(cm.rows.size()), denom);
    throw DomainError("insufficient truncation: only " + std::to_string(cm.rows.size()) + " of " +
                      std::to_string(rows) + " rows below q^" + to_string(*bound) +
                      "; extend the input series by at least " + to_string(deficit) +
                      " (past q^" + to_string(last) + ")");
  }
  return cm;
}

// Rows that carry the pivots of an elimination modulo the prime.
std::vector<std::size_t> modular_pivot_rows(const std::vector<std::vector<Rational>>& matrix) {
  std::vector<std::size_t> picked;
  if (matrix.empty()) return picked;
  const std::size_t ncols = matrix.front().size();
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(matrix.size());
  for (const auto& row : matrix) {
    std::vector<std::uint64_t> r(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      std::uint64_t den = reduce(row[j].get_den());
      if (den == 0) return {};
      r[j] = mulmod(reduce(row[j].get_num()), powmod(den, kPrime - 2));
    }
    a.push_back(std::move(r));
  }
  std::vector<std::size_t> origin(a.size());
  std::iota(origin.begin(), origin.end(), 0);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    std::swap(origin[p], origin[rank]);
    std::uint64_t inv = powmod(a[rank][c], kPrime - 2);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv);
      for (std::size_t j = c; j < ncols; ++j) {
        std::uint64_t sub = mulmod(f, a[rank][j]);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + kPrime - sub;
      }
    }
    picked.push_back(origin[rank]);
    ++rank;
  }
  return picked;
}

bool annihilates(const std::vector<std::vector<Rational>>& m, const IntVector& x) {
  for (const auto& row : m) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0 && sgn(row[j]) != 0) s += row[j] * Rational(x[j]);
    }
    if (sgn(s) != 0) return false;
  }
  return true;
}

}  // namespace

CoeffMatrix build_coeff_matrix(const PuiseuxSeries& u, const PuiseuxSeries& v, int s, int rows) {
  if (s < 1 || rows < 1) throw DomainError("build_coeff_matrix needs s >= 1 and rows >= 1");
  return build_matrix(u, v, s, rows);
}

std::size_t modular_rank(const std::vector<std::vector<Rational>>& matrix) {
  return modular_pivot_rows(matrix).size();
}

std::vector<IntVector> exact_nullspace(const std::vector<std::vector<Rational>>& matrix) {
  if (matrix.empty()) return {};
  const std::size_t ncols = matrix.front().size();
  auto a = integer_rows(matrix);
  const std::size_t nrows = a.size();

  // Bareiss: after step k every entry below the pivots is a (k+1)-minor, so
  // the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  BigInt t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (a[i][c] == 0) continue;
      if (best == nrows || mpz_sizeinbase(a[i][c].get_mpz_t(), 2) < mpz_sizeinbase(a[best][c].get_mpz_t(), 2)) {
        best = i;
      }
    }
    if (best == nrows) continue;
    std::swap(a[best], a[r]);
    const BigInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const BigInt lead = a[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < ncols; ++j) {
        if (sgn(x[j]) != 0 && a[k][j] != 0) acc += Rational(a[k][j]) * x[j];
      }
      x[pc] = -acc / Rational(a[k][pc]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

RelationSearch find_relation(const PuiseuxSeries& u, const PuiseuxSeries& v, int s_max) {
  RelationSearch out;
  for (int s = 1; s <= s_max; ++s) {
    const int rows = (s + 1) * (s + 1) + 10;
    CoeffMatrix cm = build_matrix(u, v, s, -rows);
    auto pivots = modular_pivot_rows(cm.rows);
    RankProfile prof{s, cm.rows.size(), cm.columns.size(), pivots.size()};
    if (prof.rank == prof.columns) {
      out.profile.push_back(prof);
      continue;
    }
    // Rows independent mod p are independent over Q; their kernel is the full
    // kernel unless the rational rank is larger, which the check below catches.
    std::vector<std::vector<Rational>> sub;
    for (auto i : pivots) sub.push_back(cm.rows[i]);
    std::vector<IntVector> basis = sub.empty() ? exact_nullspace(cm.rows) : exact_nullspace(sub);
    if (!std::all_of(basis.begin(), basis.end(), [&](const IntVector& x) { return annihilates(cm.rows, x); })) {
      basis = exact_nullspace(cm.rows);
    }
    prof.rank = prof.columns - basis.size();
    out.profile.push_back(prof);
    if (basis.empty()) continue;

    out.kernel = canonical_kernel(cm.columns, basis);
    auto best = std::min_element(out.kernel.begin(), out.kernel.end(), simpler);
    out.poly = *best;
    out.degree = s;
    return out;
  }
  return out;
}

PuiseuxSeries relation_residual_series(const BivarIntPoly& poly, const UBinding& u, VBinding v,
                                       const Rational& order) {
  Rational work = order;
  for (int attempt = 0; attempt < 6; ++attempt) {
    PuiseuxSeries res = poly.evaluate(u_series(u, work), v_series(v, work));
    if (res.is_exact() || res.order() >= order) return res.truncated(order);
    work += order - res.order();
  }
  throw ConsistencyError("could not reach the requested residual order");
}

BigReal relation_residual_numeric(const BivarIntPoly& poly, const UBinding& u, VBinding v,
                                  const Rational& r, int digits) {
  const int work = digits + kGuardDigits;
  BigReal q = nome_of(BigReal(r, work), work);
  return abs(poly.evaluate(u_value(u, q, work), v_value(v, q, work))).with_digits(digits);
}

MinedRelation validate(MinedRelation rel, int extra_orders, const std::vector<Rational>& points,
                       int digits) {
  const Rational target = rel.matrix_order + extra_orders;
  PuiseuxSeries res = relation_residual_series(rel.poly, rel.u, rel.v, target);
  if (!res.is_zero()) {
    throw ValidationFailed("series residual of " + rel.poly.to_string() + " is nonzero at q^" +
                           to_string(res.leading_exponent()) + " (checked through q^" +
                           to_string(target) + ")");
  }
  rel.validated_order = target;
  rel.numeric_checks.clear();
  const BigReal tol = pow10(-(digits / 2), digits);
  for (const auto& r : points) {
    BigReal resid = relation_residual_numeric(rel.poly, rel.u, rel.v, r, digits);
    if (!(resid < tol)) {
      throw ValidationFailed("numeric residual " + resid.to_sci() + " at r=" + to_string(r) +
                             " exceeds " + tol.to_sci());
    }
    rel.numeric_checks.push_back(NumericCheck{r, digits, resid, tol});
  }
  return rel;
}

MinedRelation mine(const UBinding& u, VBinding v, int s_max, const Rational& order,
                   const ValidationPlan& plan) {
  if (s_max < 1) throw DomainError("mine needs s_max >= 1");
  const Rational needed((s_max + 1) * (s_max + 1) + kMiningGuardOrders);
  if (order < needed) {
    throw DomainError("mine needs order >= (s_max+1)^2 + " + std::to_string(kMiningGuardOrders) +
                      " = " + to_string(needed));
  }
  const Rational padded = order + kMiningGuardOrders;
  RelationSearch found = find_relation(u_series(u, padded), v_series(v, padded), s_max);
  if (!found.poly) {
    throw NotFound("no relation up to degree " + std::to_string(s_max) + ";" +
                   profile_text(found.profile));
  }
  MinedRelation rel{u, v, *found.poly, found.degree, padded, padded, {}};
  return validate(std::move(rel), plan.extra_orders, plan.points, plan.digits);
}

}  // namespace thetaq
