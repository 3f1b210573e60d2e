#include "thetaq/qseries.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

using Index = PuiseuxSeries::Index;

Index grid_of(const Rational& x) { return to_int64(x.get_den()); }

Index bound_on_grid(const Rational& order, Index denom) {
  return to_int64(ceil(order * Rational(BigInt(std::to_string(denom)))));
}

Index index_on_grid(const Rational& e, Index denom) {
  Rational s = e * Rational(BigInt(std::to_string(denom)));
  return to_int64(s.get_num());  // caller guarantees s is integral
}

// Builds sum_n sign(n) q^{a n^2 + b n} for all n with exponent < order.
PuiseuxSeries quadratic_sum(const Rational& a, const Rational& b, const Rational& order,
                            bool alternating) {
  if (sgn(a) <= 0) throw DomainError("theta_series needs a > 0");
  const Index denom = lcm64(grid_of(a), grid_of(b));
  const Index hi = bound_on_grid(order, denom);
  PuiseuxSeries::Terms terms;

  auto exponent = [&](std::int64_t n) -> Rational {
    return a * Rational(BigInt(std::to_string(n))) * Rational(BigInt(std::to_string(n))) +
           b * Rational(BigInt(std::to_string(n)));
  };
  auto add = [&](std::int64_t n) {
    Rational e = exponent(n);
    if (e >= order) return false;
    Index k = index_on_grid(e, denom);
    Rational c = (alternating && (n % 2 != 0)) ? Rational(-1) : Rational(1);
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) it->second += c;
    return true;
  };

  // The exponent is convex in n with its minimum near -b/(2a).
  const std::int64_t vertex = to_int64(floor(-b / (2 * a)));
  for (std::int64_t n = vertex; add(n); --n) {
  }
  for (std::int64_t n = vertex + 1; add(n); ++n) {
  }
  return PuiseuxSeries(denom, std::move(terms), hi);
}

}  // namespace

ThetaSpec::ThetaSpec(Rational a, Rational p) : a_(std::move(a)), p_(std::move(p)) {
  if (sgn(p_) <= 0) throw DomainError("theta quotient needs p > 0");
  delta_ = delta_of(a_, p_);
}

Rational ThetaSpec::delta_of(const Rational& a, const Rational& p) {
  return p / 12 - a / 2 + a * a / (2 * p);
}

PuiseuxSeries eta_series(const Rational& scale, const Rational& order) {
  if (sgn(scale) <= 0) throw DomainError("eta_series needs a positive scale");
  const Index denom = grid_of(scale);
  const Index hi = bound_on_grid(order, denom);
  PuiseuxSeries::Terms terms;
  if (hi > 0) terms.emplace(0, Rational(1));
  // Euler: prod (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}, x = q^scale.
  for (std::int64_t k = 1;; ++k) {
    bool any = false;
    for (std::int64_t kk : {k, -k}) {
      Rational e = scale * Rational(BigInt(std::to_string(kk * (3 * kk - 1) / 2)));
      if (e < order) {
        terms.emplace(index_on_grid(e, denom), Rational(k % 2 == 0 ? 1 : -1));
        any = true;
      }
    }
    if (!any) break;
  }
  return PuiseuxSeries(denom, std::move(terms), hi);
}

PuiseuxSeries theta_series(const Rational& a, const Rational& b, const Rational& order) {
  return quadratic_sum(a, b, order, true);
}

PuiseuxSeries theta_plain_series(const Rational& a, const Rational& b, const Rational& order) {
  return quadratic_sum(a, b, order, false);
}

PuiseuxSeries A_series(const ThetaSpec& spec, const Rational& order) {
  const Rational inner = order - spec.delta();
  PuiseuxSeries theta = theta_series(spec.theta_quadratic(), spec.theta_linear(), inner);
  if (theta.is_zero()) return theta.mul_monomial(1, spec.delta());
  const Rational lowest = theta.leading_exponent();
  PuiseuxSeries eta = eta_series(spec.p(), inner - lowest);
  return (theta * invert_unit(eta)).mul_monomial(1, spec.delta()).truncated(order);
}

PuiseuxSeries A_product_series(const ThetaSpec& spec, const Rational& order) {
  // Factor exponents n p + a and n p + p - a (n >= 0) increase with n.
  const Rational first = std::min<Rational>(spec.a(), Rational(spec.p() - spec.a()));
  auto exponents = [&](std::int64_t n) {
    const Rational base = spec.p() * Rational(BigInt(std::to_string(n)));
    return std::array<Rational, 2>{base + spec.a(), base + spec.p() - spec.a()};
  };

  PuiseuxSeries negative = PuiseuxSeries::constant(1);
  Rational lowest = 0;
  for (std::int64_t n = 0; spec.p() * n + first <= 0; ++n) {
    for (const Rational& e : exponents(n)) {
      if (sgn(e) == 0) return PuiseuxSeries().truncated(order);
      if (sgn(e) < 0) {
        negative = negative * (PuiseuxSeries::constant(1) - PuiseuxSeries::monomial(1, e));
        lowest += e;
      }
    }
  }

  const Rational positive_order = order - spec.delta() - lowest;
  PuiseuxSeries prod = PuiseuxSeries::constant(1).truncated(positive_order);
  for (std::int64_t n = 0; spec.p() * n + first < positive_order; ++n) {
    for (const Rational& e : exponents(n)) {
      if (sgn(e) > 0 && e < positive_order) {
        prod = prod * (PuiseuxSeries::constant(1) - PuiseuxSeries::monomial(1, e));
      }
    }
  }
  return (prod * negative).mul_monomial(1, spec.delta()).truncated(order);
}

PuiseuxSeries modulus_series(const Rational& order) {
  const Rational inner = order - 1;
  PuiseuxSeries s = theta_plain_series(1, 1, inner);
  // sum_{n in Z} q^{n^2+n} = 2 sum_{n>=0} q^{n^2+n}
  s *= Rational(1, 2);
  PuiseuxSeries t3 = theta_plain_series(1, 0, inner);
  return (pow(s, 4) * invert_unit(pow(t3, 4))).mul_monomial(16, 1).truncated(order);
}

PuiseuxSeries modulus_root_exp_series(const Rational& order) {
  const Rational inner = order - Rational(1, 2);
  const Index hi = bound_on_grid(inner, 1);
  PuiseuxSeries::Terms terms;
  for (Index n = 1; n < hi; ++n) {
    Rational c = 0;
    for (Index d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const bool odd = ((d + n / d) % 2) != 0;
      c += odd ? Rational(-1, d) : Rational(1, d);
    }
    terms.emplace(n, -4 * c);
  }
  PuiseuxSeries arg = PuiseuxSeries(1, std::move(terms), hi).truncated(inner);
  return exp_series(arg).mul_monomial(4, Rational(1, 2)).truncated(order);
}

PuiseuxSeries h5_series(const Rational& order) {
  const Rational inner = order + Rational(1, 5);
  PuiseuxSeries top = eta_series(Rational(1, 5), inner);
  PuiseuxSeries bottom = eta_series(5, inner);
  return (top * invert_unit(bottom)).mul_monomial(1, Rational(-1, 5)).truncated(order);
}

PuiseuxSeries eta5_series(const Rational& order) {
  PuiseuxSeries h = h5_series(order);
  PuiseuxSeries one = PuiseuxSeries::constant(1);
  // 5 + 2h + h^2 = q^{-2/5}(1 + ...): sqrt_series factors the leading monomial.
  PuiseuxSeries radicand = one * Rational(5) + h * Rational(2) + h * h;
  PuiseuxSeries root = sqrt_series(radicand);
  return ((root - h - one) * Rational(1, 2)).truncated(order);
}

}  // namespace thetaq
