#include "lucas_elliptica/elliptic_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lucas_elliptica {

namespace {

// Below 1e-34 the 113-bit product is exact to working precision.
constexpr double kWideTruncation = 1e-34;

std::string describe(const Complex& z) { return to_string(z); }
std::string describe(const WideComplex& z) { return to_string(narrow(z)); }

template <typename C>
C small_weight_impl(const BasicEllipticParams<C>& ep, int s, int t) {
  const C a = ep.a, b = ep.b, q = ep.q;
  return theta_quotient(
             {C(a * ipow(q, s + 2 * t)), C(b * ipow(q, 2 * s + t - 2)),
              C(a * ipow(q, t - s - 1) / b)},
             {C(a * ipow(q, s + 2 * t - 2)), C(b * ipow(q, 2 * s + t)),
              C(a * ipow(q, t - s + 1) / b)},
             ep.p, ep.theta_cfg) *
         q;
}

template <typename C>
C big_weight_impl(const BasicEllipticParams<C>& ep, int s, int t) {
  if (t == 0) {
    return C(1);
  }
  const C a = ep.a, b = ep.b, q = ep.q;
  return theta_quotient(
             {C(a * ipow(q, s + 2 * t)), C(b * ipow(q, 2 * s)), C(b * ipow(q, 2 * s - 1)),
              C(a * ipow(q, 1 - s) / b), C(a * ipow(q, -s) / b)},
             {C(a * ipow(q, s)), C(b * ipow(q, 2 * s + t)), C(b * ipow(q, 2 * s + t - 1)),
              C(a * ipow(q, t - s + 1) / b), C(a * ipow(q, t - s) / b)},
             ep.p, ep.theta_cfg) *
         ipow(q, t);
}

// (z; q, p)_m with a zero-guard check on every factor, used for
// denominators.
template <typename C>
C guarded_factorial(const C& z, int m, const BasicEllipticParams<C>& ep) {
  using std::abs;
  C result(1);
  C zqj = z;
  for (int j = 0; j < m; ++j) {
    const C t = theta(zqj, ep.p, ep.theta_cfg);
    if (abs(t) < ep.theta_cfg.zero_guard) {
      throw SingularValue("elliptic_binom: denominator factor theta(" +
                          describe(zqj) + ") below zero guard");
    }
    result *= t;
    zqj *= ep.q;
  }
  return result;
}

template <typename C>
C elliptic_binom_impl(int n, int k, const BasicEllipticParams<C>& ep) {
  if (n < 0) {
    throw DomainError("elliptic_binom: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return C(0);
  }
  const C a = ep.a, b = ep.b, q = ep.q;
  const int m = n - k;
  C num(1);
  for (const C& z : {C(ipow(q, 1 + k)), C(a * ipow(q, 1 + k)), C(b * ipow(q, 1 + k)),
                     C(a * ipow(q, 1 - k) / b)}) {
    num *= qp_factorial(z, m, q, ep.p, ep.theta_cfg);
  }
  C den(1);
  for (const C& z : {q, C(a * q), C(b * ipow(q, 1 + 2 * k)), C(a * q / b)}) {
    den *= guarded_factorial(z, m, ep);
  }
  return num / den;
}

}  // namespace

WideParams widen(const EllipticParams& ep) {
  WideParams out;
  out.a = widen(ep.a);
  out.b = widen(ep.b);
  out.q = widen(ep.q);
  out.p = widen(ep.p);
  out.theta_cfg = ep.theta_cfg;
  out.theta_cfg.truncation_eps = std::min(ep.theta_cfg.truncation_eps, kWideTruncation);
  return out;
}

Complex small_weight(const EllipticParams& ep, int s, int t) {
  return small_weight_impl(ep, s, t);
}

WideComplex small_weight(const WideParams& ep, int s, int t) {
  return small_weight_impl(ep, s, t);
}

Complex big_weight(const EllipticParams& ep, int s, int t) {
  return big_weight_impl(ep, s, t);
}

WideComplex big_weight(const WideParams& ep, int s, int t) {
  return big_weight_impl(ep, s, t);
}

Complex dual_small_weight(const EllipticParams& ep, int s, int t) {
  return small_weight(ep.dual(), s, t);
}

Complex elliptic_binom(int n, int k, const EllipticParams& ep) {
  return elliptic_binom_impl(n, k, ep);
}

WideComplex elliptic_binom(int n, int k, const WideParams& ep) {
  return elliptic_binom_impl(n, k, ep);
}

namespace {

template <typename C>
double second_recurrence_at(int n, int k, const BasicEllipticParams<C>& ep) {
  const C lhs = elliptic_binom(n + 1, k, ep);
  C column(1);
  for (int j = 1; j <= k; ++j) {
    column *= big_weight(ep, j, 1);
  }
  return relative_residual(lhs, C(elliptic_binom(n, k, ep.scaled(2, 1)) * column +
                                  elliptic_binom(n, k - 1, ep.scaled(1, 2))));
}

template <typename C>
double pascal_recurrence_at(int n, int k, const BasicEllipticParams<C>& ep) {
  const C lhs = elliptic_binom(n + 1, k, ep);
  C step(0);
  if (k >= 1 && k <= n + 1) {
    step = elliptic_binom(n, k - 1, ep) * big_weight(ep, k, n + 1 - k);
  }
  return relative_residual(lhs, C(elliptic_binom(n, k, ep) + step));
}

template <typename C>
C elliptic_integer_impl(int n, int level, const BasicEllipticParams<C>& ep) {
  if (n < 0 || level < 0) {
    throw DomainError("elliptic_integer: n and level must be nonnegative");
  }
  const C a = ep.a, b = ep.b, q = ep.q;
  const int l = level;
  return theta_quotient(
      {C(ipow(q, n)), C(a * ipow(q, l + n)), C(b * ipow(q, 2 * l + n)),
       C(a * ipow(q, 2 - l - n) / b)},
      {q, C(a * ipow(q, l + 1)), C(b * ipow(q, 2 * l + 2 * n - 1)),
       C(a * ipow(q, 1 - l) / b)},
      ep.p, ep.theta_cfg);
}

}  // namespace

double second_recurrence_residual(int n, int k, const EllipticParams& ep) {
  return widening_residual(ep, [&](const auto& e) { return second_recurrence_at(n, k, e); });
}

double pascal_recurrence_residual(int n, int k, const EllipticParams& ep) {
  return widening_residual(ep, [&](const auto& e) { return pascal_recurrence_at(n, k, e); });
}

Complex elliptic_integer(int n, int level, const EllipticParams& ep) {
  return elliptic_integer_impl(n, level, ep);
}

WideComplex elliptic_integer(int n, int level, const WideParams& ep) {
  return elliptic_integer_impl(n, level, ep);
}

Rational q_pochhammer(const Rational& a, int n, const Rational& q) {
  if (n == 0) {
    return Rational(1);
  }
  if (n > 0) {
    Rational result(1);
    Rational aqj = a;
    for (int j = 0; j < n; ++j) {
      result *= 1 - aqj;
      aqj *= q;
    }
    return result;
  }
  Rational den(1);
  Rational aqj = a * ipow(q, n);
  for (int j = 0; j < -n; ++j) {
    den *= 1 - aqj;
    aqj *= q;
  }
  if (den == 0) {
    throw DomainError("q_pochhammer: vanishing denominator factor");
  }
  return 1 / den;
}

Rational q_binom(int n, int k, const Rational& q) {
  if (q == 0) {
    throw DomainError("q_binom: q must be nonzero");
  }
  if (n < 0) {
    throw DomainError("q_binom: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return Rational(0);
  }
  const Rational den = q_pochhammer(q, n - k, q);
  if (den == 0) {
    throw DomainError("q_binom: factor 1 - q^j vanishes (q is a root of unity)");
  }
  return q_pochhammer(ipow(q, 1 + k), n - k, q) / den;
}

}  // namespace lucas_elliptica
