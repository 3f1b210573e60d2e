#include "thetaq/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "thetaq/errors.hpp"
#include "thetaq/modular.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/qseries.hpp"

namespace thetaq {

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::closed_form:
      return "closed_form";
    case EntryKind::poly_relation:
      return "poly_relation";
    case EntryKind::series_identity:
      return "series_identity";
  }
  return "?";
}

std::string to_string(Expectation e) {
  return e == Expectation::expected_pass ? "expected_pass" : "known_discrepancy";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::flagged:
      return "flagged";
  }
  return "?";
}

namespace {

using Sides = std::pair<BigReal, BigReal>;
using ClosedForm = std::function<Sides(const EvalPoint&, int work)>;
using SeriesFn = std::function<PuiseuxSeries(const Rational&)>;

BigReal cst(long v, int work) { return BigReal(v, work); }

void settle(EntryReport& rep) {
  const bool numeric_ok =
      std::all_of(rep.residuals.begin(), rep.residuals.end(), [](const PointResidual& p) { return p.passed(); });
  const bool have_numeric = !rep.residuals.empty();
  const bool have_series = rep.series_order.has_value();
  if (numeric_ok && rep.series_zero) {
    rep.verdict = Verdict::pass;
  } else if (have_numeric && have_series && numeric_ok != rep.series_zero) {
    rep.verdict = Verdict::flagged;
    rep.notes += (rep.notes.empty() ? "" : "; ") + std::string("series and numeric checks disagree");
  } else {
    rep.verdict = Verdict::fail;
  }
}

EntryReport blank(const CatalogEntry& e) {
  EntryReport rep;
  rep.id = e.id;
  rep.kind = e.kind;
  rep.expectation = e.expectation;
  return rep;
}

PointResidual make_residual(const std::string& var, const std::string& point, int digits,
                            const BigReal& residual) {
  return PointResidual{var, point, digits, residual.with_digits(digits), tolerance(digits)};
}

// Numeric residual |lhs - rhs| at each r.
std::function<EntryReport(const CatalogEntry&, const VerifyOptions&)> closed_form(ClosedForm fn) {
  return [fn](const CatalogEntry& e, const VerifyOptions& o) {
    EntryReport rep = blank(e);
    const int work = o.digits + kGuardDigits;
    for (const auto& r : o.rs) {
      EvalPoint pt = singular_modulus(r, work);
      auto [lhs, rhs] = fn(pt, work);
      rep.residuals.push_back(make_residual("r", to_string(r), o.digits, abs(lhs - rhs)));
    }
    settle(rep);
    return rep;
  };
}

// P(u, v) as a series through `order`, growing the inputs until it is known there.
PuiseuxSeries padded_residual(const BivarIntPoly& poly, const SeriesFn& u, const SeriesFn& v,
                              const Rational& order) {
  Rational work = order;
  for (int attempt = 0; attempt < 6; ++attempt) {
    PuiseuxSeries res = poly.evaluate(u(work), v(work));
    if (res.is_exact() || res.order() >= order) return res.truncated(order);
    work += order - res.order() + 1;
  }
  throw ConsistencyError("could not reach the requested residual order");
}

void record_series(EntryReport& rep, const PuiseuxSeries& residual, const Rational& order) {
  rep.series_order = order;
  rep.series_zero = residual.is_zero();
  if (!rep.series_zero) rep.series_failure_at = residual.leading_exponent();
}

EntryReport run_poly(const CatalogEntry& e, const VerifyOptions& o) {
  EntryReport rep = blank(e);
  const PolyRecipe& pr = *e.poly;
  for (const auto& r : o.rs) {
    BigReal res = relation_residual_numeric(pr.poly, pr.u, pr.v, r, o.digits);
    rep.residuals.push_back(make_residual("r", to_string(r), o.digits, res));
  }
  record_series(rep, relation_residual_series(pr.poly, pr.u, pr.v, o.order), o.order);
  settle(rep);
  if (rep.verdict != Verdict::pass && o.remine) {
    try {
      rep.remined = remine_entry(e.id, o);
      std::ostringstream os;
      os << "printed relation fails; re-mined " << rep.remined->poly.to_string() << " for u=A("
         << to_string(rep.remined->u.spec.a()) << "," << to_string(rep.remined->u.spec.p());
      if (rep.remined->u.nome_power != 1) os << ";q^" << rep.remined->u.nome_power;
      os << ")^" << rep.remined->u.power << ", v=" << to_string(rep.remined->v);
      rep.notes += (rep.notes.empty() ? "" : "; ") + os.str();
    } catch (const std::exception& ex) {
      rep.notes += (rep.notes.empty() ? "" : "; ") + std::string("remine failed: ") + ex.what();
    }
  }
  return rep;
}

BigReal eval_A_product(const ThetaSpec& spec, const BigReal& q, int work) {
  // q^delta prod_{n>=0} (1 - q^{np+a}) (1 - q^{np+p-a})
  BigReal acc = pow(q, spec.delta());
  const BigReal eps = pow10(-work - 5, work);
  BigReal one(1L, work);
  for (long n = 0;; ++n) {
    Rational e1 = Rational(n) * spec.p() + spec.a();
    Rational e2 = Rational(n) * spec.p() + spec.p() - spec.a();
    BigReal t1 = pow(q, e1);
    BigReal t2 = pow(q, e2);
    acc *= (one - t1) * (one - t2);
    if (sgn(e1) > 0 && sgn(e2) > 0 && abs(t1) < eps && abs(t2) < eps) break;
  }
  return acc;
}

EntryReport run_jtp(const CatalogEntry& e, const VerifyOptions& o) {
  EntryReport rep = blank(e);
  const std::vector<std::pair<Rational, Rational>> pairs{
      {1, 4}, {1, 3}, {-1, 6}, {-2, 8}, {1, 5}, {Rational(1, 2), 4}, {Rational(1, 2), 2}};
  rep.series_order = o.order;
  std::ostringstream notes;
  for (const auto& [a, p] : pairs) {
    ThetaSpec spec(a, p);
    PuiseuxSeries diff = A_series(spec, o.order) - A_product_series(spec, o.order);
    if (!diff.is_zero()) {
      rep.series_zero = false;
      if (!rep.series_failure_at) rep.series_failure_at = diff.leading_exponent();
      notes << "(" << to_string(a) << "," << to_string(p) << ") differs at q^"
            << to_string(diff.leading_exponent()) << "; ";
    }
  }
  // (8,6): the product carries a factor with negative exponent, compare numerically.
  const int work = o.digits + kGuardDigits;
  const ThetaSpec s86(8, 6);
  for (const auto& r : o.rs) {
    BigReal q = nome_of(BigReal(r, work), work);
    BigReal diff = abs(eval_A(s86, q, work) - eval_A_product(s86, q, work));
    rep.residuals.push_back(make_residual("r", to_string(r), o.digits, diff));
  }
  notes << "series pairs (1,4),(1,3),(-1,6),(-2,8),(1,5),(1/2,4),(1/2,2); (8,6) numeric";
  rep.notes = notes.str();
  settle(rep);
  return rep;
}

EntryReport run_prefactor(const CatalogEntry& e, const VerifyOptions&) {
  EntryReport rep = blank(e);
  struct Row {
    Rational a, p, printed;
  };
  const std::vector<Row> rows{{1, 3, Rational(1, 12)},        {8, 6, Rational(-11, 6)},
                              {-1, 6, Rational(-13, 12)},     {-2, 8, Rational(-23, 12)},
                              {1, 5, Rational(-1, 60)},       {Rational(1, 2), 4, Rational(-11, 96)}};
  std::ostringstream notes;
  bool ok = true;
  for (const auto& row : rows) {
    Rational d = ThetaSpec(row.a, row.p).delta();
    Rational neg = -d;
    if (neg != row.printed) {
      ok = false;
      notes << "(" << to_string(row.a) << "," << to_string(row.p) << "): -delta=" << to_string(neg)
            << " vs " << to_string(row.printed) << "; ";
    }
  }
  notes << (ok ? "all prefactors equal -delta(a,p)" : "mismatch");
  rep.notes = notes.str();
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  return rep;
}

EntryReport run_eq27(const CatalogEntry& e, const VerifyOptions& o) {
  EntryReport rep = blank(e);
  const ThetaSpec spec(1, 4);
  const int work = o.digits + kGuardDigits;
  for (const auto& r : o.rs) {
    BigReal q = nome_of(BigReal(r, work), work);
    BigReal u = eval_A(spec, q, work);
    BigReal v = eval_A(spec, q * q, work);
    rep.residuals.push_back(make_residual("r", to_string(r), o.digits, abs(modular_eq2_A14(u, v))));
  }
  BivarIntPoly eq{{8, 0, 16}, {16, 8, 1}, {0, 16, -1}};
  auto u = [&](const Rational& ord) { return A_series(spec, ord); };
  auto v = [&](const Rational& ord) { return rescale(A_series(spec, ord / 2), 2); };
  record_series(rep, padded_residual(eq, u, v, o.order), o.order);
  settle(rep);
  return rep;
}

EntryReport run_thm3(const CatalogEntry& e, const VerifyOptions& o) {
  EntryReport rep = blank(e);
  const int work = o.digits + kGuardDigits;
  const std::vector<std::pair<std::string, BigReal>> xs{
      {"3/10", BigReal(Rational(3, 10), work)},
      {"1/sqrt(2)", sqrt(BigReal(Rational(1, 2), work))},
      {"3/5", BigReal(Rational(3, 5), work)}};
  for (const auto& [label, x] : xs) {
    rep.residuals.push_back(make_residual("x", label, o.digits, check_theorem3_instance(x, o.digits)));
  }
  settle(rep);
  return rep;
}

EntryReport run_eq32(const CatalogEntry& e, const VerifyOptions& o) {
  EntryReport rep = blank(e);
  PuiseuxSeries diff = modulus_root_exp_series(o.order) -
                       sqrt_series(modulus_series(o.order + Rational(1, 2))).truncated(o.order);
  record_series(rep, diff.truncated(o.order), o.order);
  settle(rep);
  return rep;
}

EntryReport run_eq45(const CatalogEntry& e, const VerifyOptions& o) {
  EntryReport rep = blank(e);
  const int work = o.digits + kGuardDigits;
  auto residual = [&](const BigReal& M, const BigReal& m) {
    BigReal one(1L, work);
    return abs(pow(M * Rational(5) - Rational(1), 5L) * (one - M) - m * (one - m) * M * Rational(256));
  };
  std::vector<PointResidual> direct, recip;
  for (const auto& r : o.rs) {
    EvalPoint pt = singular_modulus(r, work);
    BigReal t1 = eval_theta_plain(1, 0, pt.q, work);
    BigReal t5 = eval_theta_plain(5, 0, pt.q, work);
    BigReal M = (t5 * t5) / (t1 * t1);
    BigReal m = pt.k * pt.k;
    direct.push_back(make_residual("r", to_string(r), o.digits, residual(M, m)));
    recip.push_back(make_residual("r", to_string(r), o.digits, residual(BigReal(1L, work) / M, m)));
  }
  auto all_pass = [](const std::vector<PointResidual>& v) {
    return std::all_of(v.begin(), v.end(), [](const PointResidual& p) { return p.passed(); });
  };
  const bool d_ok = all_pass(direct), r_ok = all_pass(recip);
  std::ostringstream notes;
  auto worst = [](const std::vector<PointResidual>& v) {
    BigReal w = v.front().residual;
    for (const auto& p : v) w = p.residual > w ? p.residual : w;
    return w.to_sci();
  };
  if (d_ok != r_ok) {
    rep.residuals = d_ok ? direct : recip;
    notes << "M5 = " << (d_ok ? kM5Direct : kM5Reciprocal) << "; other candidate "
          << (d_ok ? kM5Reciprocal : kM5Direct) << " leaves residual " << worst(d_ok ? recip : direct);
    rep.verdict = Verdict::pass;
  } else {
    rep.residuals = direct;
    notes << (d_ok ? "both multiplier candidates pass" : "neither multiplier candidate passes") << " ("
          << kM5Direct << ": " << worst(direct) << ", " << kM5Reciprocal << ": " << worst(recip) << ")";
    rep.verdict = Verdict::fail;
  }
  rep.notes = notes.str();
  return rep;
}

// Closed-form right sides.

Sides eq11(long s, const EvalPoint& pt, int work) {
  BigReal lhs = eval_theta_plain(1, 2 * s, pt.q, work);
  BigReal rhs = pow(pt.q, -s * s) * sqrt(ellipk(pt.k, work) * Rational(2) / pi(work));
  return {lhs, rhs};
}

Sides eq12(long s, const EvalPoint& pt, int work) {
  const long m = 2 * s + 1;
  BigReal lhs = eval_theta_plain(1, m, pt.q, work);
  SingularChain c = singular_chain(pt.k);
  BigReal rhs = pow(cst(2, work), Rational(5, 6)) * pow(pt.q, Rational(-m * m, 4)) *
                pow(c.k11 * c.k12 * c.k21, Rational(1, 6)) / pow(c.k22, Rational(1, 3)) *
                sqrt(ellipk(c.k11, work) / pi(work));
  return {lhs, rhs};
}

Sides eq13(const EvalPoint& pt, int work) {
  BigReal lhs = pow(eval_eta(1, pt.q, work), 8L);
  BigReal rhs = pow(cst(2, work), Rational(8, 3)) / pow(pi(work), 4L) * pow(pt.q, Rational(-1, 3)) *
                pow(pt.k, Rational(2, 3)) * pow(pt.kprime, Rational(8, 3)) * pow(ellipk(pt.k, work), 4L);
  return {lhs, rhs};
}

BigReal a14_24_printed(const EvalPoint& pt, int work) {
  BigReal k2 = pt.k * pt.k;
  return (cst(1, work) - k2) * Rational(16) / k2;
}

BigReal a14_24_corrected(const EvalPoint& pt, int work) {
  BigReal k2 = pt.k * pt.k;
  BigReal c = cst(1, work) - k2;
  return c * c * Rational(16) / k2;
}

Sides thm1(const EvalPoint& pt, int work) {
  BigReal lhs = eval_theta(2, 1, pt.q, work);
  BigReal inner = (cst(1, work) - pt.k * pt.k) * Rational(4) / pt.k;
  BigReal rhs = pow(pt.q, Rational(1, 24)) * eval_eta(4, pt.q, work) * pow(inner, Rational(1, 12));
  return {lhs, rhs};
}

Sides eq18(const EvalPoint& pt, int work) {
  BigReal lhs = eval_A(ThetaSpec(Rational(1, 2), 2), pt.q, work);
  BigReal one = cst(1, work);
  BigReal inner = pow(one - pt.k, 4L) * Rational(4) / (pt.k * pow(one + pt.k, 2L));
  return {lhs, pow(inner, Rational(1, 24))};
}

Sides thm2(const EvalPoint& pt, int work) {
  BigReal lhs = eval_theta(2, Rational(3, 2), pt.q, work);
  BigReal one = cst(1, work);
  const BigReal& k = pt.k;
  BigReal t = k + Rational(2) - sqrt(one + k) * Rational(2);
  BigReal inner = pow(one - k, 4L) * pow(t, 12L) * Rational(4) / (pow(k, 13L) * pow(one + k, 2L));
  BigReal rhs = pow(pt.q, Rational(-11, 96)) * eval_eta(4, pt.q, work) * pow(inner, Rational(1, 48));
  return {lhs, rhs};
}

BivarIntPoly table1_poly() {
  return BivarIntPoly{{4, 5, 1},           {4, 4, -4},          {4, 3, 6},           {4, 2, -4},
                      {4, 1, 1},           {3, 6, -16},         {3, 5, 84},          {3, 4, -12480},
                      {3, 3, -40712},      {3, 2, -12480},      {3, 1, 84},          {3, 0, -16},
                      {2, 5, 196830},      {2, 4, -787320},     {2, 3, 1180980},     {2, 2, -787320},
                      {2, 1, 196830},      {1, 5, 19131876},    {1, 4, -76527504},   {1, 3, 114791256},
                      {1, 2, -76527504},   {1, 1, 19131876},    {0, 5, 387420489},   {0, 4, -1549681956},
                      {0, 3, 2324522934},  {0, 2, -1549681956}, {0, 1, 387420489}};
}

BivarIntPoly table2_poly() {
  return BivarIntPoly{{8, 4, 1},   {8, 2, -1},  {6, 6, 16},   {6, 4, -24},  {6, 2, -24},
                      {6, 0, 16},  {4, 4, -486}, {4, 2, 486}, {0, 4, -19683}, {0, 2, 19683}};
}

BivarIntPoly table3_poly() {
  return BivarIntPoly{{4, 3, 1},  {4, 1, -1}, {3, 2, 16}, {2, 3, -18}, {2, 1, 18},
                      {1, 4, 4},  {1, 2, -8}, {1, 0, 4},  {0, 3, 1},   {0, 1, -1}};
}

BivarIntPoly table4_poly() {
  return BivarIntPoly{{4, 1, -1}, {2, 1, -64}, {0, 2, 256}, {0, 1, -512}, {0, 0, 256}};
}

BivarIntPoly table5_poly() {
  return BivarIntPoly{{4, 0, 1},      {0, 11, 1},     {0, 10, 55},   {0, 9, 1205},
                      {0, 8, 13090},  {0, 7, 69585},  {0, 6, 134761}, {0, 5, -69585},
                      {0, 4, 13090},  {0, 3, -1205},  {0, 2, 55},    {0, 1, -1}};
}

CatalogEntry cf(std::string id, Expectation ex, std::string summary, ClosedForm fn) {
  return CatalogEntry{std::move(id), EntryKind::closed_form, ex, std::move(summary), std::nullopt,
                      closed_form(std::move(fn))};
}

CatalogEntry special(std::string id, EntryKind kind, std::string summary,
                     std::function<EntryReport(const CatalogEntry&, const VerifyOptions&)> run) {
  return CatalogEntry{std::move(id), kind, Expectation::expected_pass, std::move(summary), std::nullopt,
                      std::move(run)};
}

CatalogEntry poly_entry(std::string id, Expectation ex, std::string summary, PolyRecipe recipe) {
  return CatalogEntry{std::move(id), EntryKind::poly_relation, ex, std::move(summary), std::move(recipe),
                      run_poly};
}

std::vector<CatalogEntry> build_catalog() {
  using E = Expectation;
  std::vector<CatalogEntry> c;
  for (long s : {0L, 1L, 2L}) {
    c.push_back(cf("eq11_s" + std::to_string(s), E::expected_pass,
                   "sum q^{n^2+2sn} = q^{-s^2} sqrt(2K/pi), s=" + std::to_string(s),
                   [s](const EvalPoint& pt, int w) { return eq11(s, pt, w); }));
  }
  for (long s : {0L, 1L}) {
    c.push_back(cf("eq12_s" + std::to_string(s), E::expected_pass,
                   "sum q^{n^2+(2s+1)n} via the k11..k22 chain, s=" + std::to_string(s),
                   [s](const EvalPoint& pt, int w) { return eq12(s, pt, w); }));
  }
  c.push_back(cf("eq13", E::expected_pass, "eta(q)^8 in terms of k, k', K", eq13));
  c.push_back(cf("eq15_as_printed", E::known_discrepancy, "A(1,4)^24 = 16(1-k^2)/k^2",
                 [](const EvalPoint& pt, int w) {
                   return Sides{pow(eval_A(ThetaSpec(1, 4), pt.q, w), 24L), a14_24_printed(pt, w)};
                 }));
  c.push_back(cf("eq15_corrected", E::expected_pass, "A(1,4)^24 = 16(1-k^2)^2/k^2",
                 [](const EvalPoint& pt, int w) {
                   return Sides{pow(eval_A(ThetaSpec(1, 4), pt.q, w), 24L), a14_24_corrected(pt, w)};
                 }));
  c.push_back(cf("eq16_as_printed", E::known_discrepancy, "A(1,4) = (16(1-k^2)/k^2)^{1/24}",
                 [](const EvalPoint& pt, int w) {
                   return Sides{eval_A(ThetaSpec(1, 4), pt.q, w), pow(a14_24_printed(pt, w), Rational(1, 24))};
                 }));
  c.push_back(cf("eq16corr", E::expected_pass, "A(1,4) = (16(1-k^2)^2/k^2)^{1/24}",
                 [](const EvalPoint& pt, int w) {
                   return Sides{eval_A(ThetaSpec(1, 4), pt.q, w), pow(a14_24_corrected(pt, w), Rational(1, 24))};
                 }));
  c.push_back(cf("thm1", E::expected_pass, "sum (-1)^n q^{2n^2+n} = q^{1/24} eta(q^4) (4(1-k^2)/k)^{1/12}", thm1));
  c.push_back(cf("eq18", E::expected_pass, "A(1/2,2) = (4(1-k)^4/(k(1+k)^2))^{1/24}", eq18));
  c.push_back(cf("thm2", E::expected_pass, "sum (-1)^n q^{2n^2+3n/2} in terms of eta(q^4) and k", thm2));
  c.push_back(special("eq27", EntryKind::closed_form,
                      "16u^8 + u^16 v^8 - v^16 = 0 for u=A(1,4;q), v=A(1,4;q^2)", run_eq27));
  c.push_back(special("thm3_instance", EntryKind::closed_form, "Q(S_2(x)) = P_2(Q(x)) for Q(x)=(4(1-x^2)/x)^{1/12}",
                      run_thm3));
  c.push_back(special("eq32", EntryKind::series_identity, "k = 4 q^{1/2} exp(-4 sum ...) equals sqrt(m)", run_eq32));

  auto ub = [](Rational a, Rational p, int power, int nome = 1) { return UBinding{ThetaSpec(a, p), power, nome}; };
  c.push_back(poly_entry("table1", E::expected_pass, "u=A(1,3)^12, v=m",
                         PolyRecipe{ub(1, 3, 12), VBinding::m, table1_poly(), {{ub(1, 3, 12), VBinding::m, 6}}}));
  c.push_back(poly_entry("table2", E::known_discrepancy, "u=A(8,6)^6, v=k",
                         PolyRecipe{ub(8, 6, 6), VBinding::sqrt_m, table2_poly(), {{ub(8, 6, 6), VBinding::sqrt_m, 6}}}));
  c.push_back(poly_entry("table3", E::expected_pass, "u=A(-1,6)^6, v=k",
                         PolyRecipe{ub(-1, 6, 6), VBinding::sqrt_m, table3_poly(), {{ub(-1, 6, 6), VBinding::sqrt_m, 4}}}));
  c.push_back(poly_entry("table4", E::expected_pass, "u=A(-2,8)^12, v=m(q^2)^2",
                         PolyRecipe{ub(-2, 8, 12), VBinding::m_q2_squared, table4_poly(),
                                    {{ub(-2, 8, 12), VBinding::m_q2_squared, 4}}}));
  c.push_back(poly_entry("table5", E::known_discrepancy, "u=A(1,5;q^2)^15, v=eta5(q^4)^5",
                         PolyRecipe{ub(1, 5, 15, 2), VBinding::eta5_q4_pow5, table5_poly(),
                                    {{ub(1, 5, 15, 2), VBinding::eta5_q4_pow5, 4},
                                     {ub(1, 5, 15, 2), VBinding::eta5_q2_pow5, 11}}}));
  c.push_back(special("eq45", EntryKind::closed_form, "(5M-1)^5 (1-M) = 256 m (1-m) M for the quintic multiplier M",
                      run_eq45));
  c.push_back(special("jtp_consistency", EntryKind::series_identity,
                      "triple-product form of A equals the theta/eta form", run_jtp));
  c.push_back(special("prefactor_consistency", EntryKind::closed_form,
                      "table prefactor exponents equal -delta(a,p)", run_prefactor));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw NotFound("unknown catalog entry '" + id + "'");
}

EntryReport verify_entry(const std::string& id, const VerifyOptions& opts) {
  if (opts.digits < 20) throw DomainError("digits must be at least 20");
  if (opts.order < 40) throw DomainError("order must be at least 40");
  for (const auto& r : opts.rs) {
    if (sgn(r) <= 0) throw DomainError("r values must be positive");
  }
  const CatalogEntry& e = find_entry(id);
  return e.run(e, opts);
}

MinedRelation remine_entry(const std::string& id, const VerifyOptions& opts) {
  const CatalogEntry& e = find_entry(id);
  if (!e.poly) throw DomainError("entry '" + id + "' is not a polynomial relation");
  std::string why;
  for (const auto& attempt : e.poly->remine) {
    const Rational floor_order((attempt.s_max + 1) * (attempt.s_max + 1) + kMiningGuardOrders);
    const Rational order = std::max(opts.order, floor_order);
    try {
      ValidationPlan plan;
      plan.digits = opts.digits;
      return mine(attempt.u, attempt.v, attempt.s_max, order, plan);
    } catch (const NotFound& ex) {
      why += std::string(why.empty() ? "" : " | ") + to_string(attempt.v) + ": " + ex.what();
    } catch (const ValidationFailed& ex) {
      why += std::string(why.empty() ? "" : " | ") + to_string(attempt.v) + ": " + ex.what();
    }
  }
  throw NotFound("re-mining '" + id + "' failed: " + why);
}

Report verify_all(const VerifyOptions& opts) {
  const auto& entries = catalog();
  Report rep{opts, std::vector<EntryReport>(entries.size())};
  unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(entries.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        rep.entries[i] = verify_entry(entries[i].id, opts);
      } catch (const std::exception& ex) {
        EntryReport er = blank(entries[i]);
        er.verdict = Verdict::flagged;
        er.notes = std::string("error: ") + ex.what();
        rep.entries[i] = std::move(er);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rep;
}

bool meets_expectation(const EntryReport& r) {
  if (r.verdict == Verdict::pass) return true;
  if (r.expectation == Expectation::expected_pass) return false;
  if (r.kind == EntryKind::poly_relation) return r.remined.has_value();
  return r.verdict == Verdict::fail;
}

}  // namespace thetaq
