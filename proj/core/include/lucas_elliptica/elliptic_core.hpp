// Elliptic weights, elliptic binomial coefficients, elliptic integers and
// exact q-binomial coefficients.

#pragma once

#include "lucas_elliptica/scalar_theta.hpp"
#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

/// Independent variables a, b, base q and nome p of the elliptic weights.
template <typename C>
struct BasicEllipticParams {
  C a{0.5, 0.1};
  C b{0.7, -0.2};
  C q{0.9, 0.15};
  C p{0.2, 0.0};
  ThetaConfig theta_cfg{};

  /// Throws DomainError unless |p| < 1 and a, b, q are nonzero.
  void validate() const {
    using std::abs;
    theta_cfg.validate();
    if (!(abs(p) < 1)) {
      throw DomainError("EllipticParams: nome must satisfy |p| < 1");
    }
    if (a == C(0) || b == C(0) || q == C(0)) {
      throw DomainError("EllipticParams: a, b and q must be nonzero");
    }
  }

  /// (a q^i, b q^j) with q, p unchanged.
  BasicEllipticParams scaled(int a_power, int b_power) const {
    BasicEllipticParams out = *this;
    out.a = a * ipow(q, a_power);
    out.b = b * ipow(q, b_power);
    return out;
  }

  /// Parameters (a/b, 1/b) realizing the dual weights.
  BasicEllipticParams dual() const {
    BasicEllipticParams out = *this;
    out.a = a / b;
    out.b = C(1) / b;
    return out;
  }
};

using EllipticParams = BasicEllipticParams<Complex>;
using WideParams = BasicEllipticParams<WideComplex>;

/// The same point in 113-bit arithmetic, with the theta truncation tightened
/// to match.
WideParams widen(const EllipticParams& ep);

/// A double-precision residual above this may be rounding error rather than
/// a failure of the identity being checked.
inline constexpr double kWideningThreshold = 1e-12;

/// fn(ep), or fn(widen(ep)) when that exceeds kWideningThreshold; fn is
/// generic over the parameter type and returns a residual.
template <typename Fn>
double widening_residual(const EllipticParams& ep, Fn&& fn) {
  const double r = fn(ep);
  return r <= kWideningThreshold ? r : fn(widen(ep));
}

/// Parameters for which w(s+i, t+j) at *this equals w(s, t) at the result.
template <typename C>
BasicEllipticParams<C> weight_shift(const BasicEllipticParams<C>& ep, int ds, int dt) {
  return ep.scaled(ds + 2 * dt, 2 * ds + dt);
}

/// Small elliptic weight
///   w(s,t) = theta(a q^{s+2t}, b q^{2s+t-2}, a q^{t-s-1}/b)
///          / theta(a q^{s+2t-2}, b q^{2s+t}, a q^{t-s+1}/b) * q.
Complex small_weight(const EllipticParams& ep, int s, int t);
WideComplex small_weight(const WideParams& ep, int s, int t);

/// Big elliptic weight W(s,t) by its closed theta quotient; valid for every
/// integer t and equal to prod_{k=1}^t w(s,k) for t >= 0.
Complex big_weight(const EllipticParams& ep, int s, int t);
WideComplex big_weight(const WideParams& ep, int s, int t);

/// w_{a/b,1/b;q,p}(s,t), which equals 1 / w_{a,b;q,p}(1-s-t, t).
Complex dual_small_weight(const EllipticParams& ep, int s, int t);

/// Elliptic binomial coefficient
///   (q^{1+k}, a q^{1+k}, b q^{1+k}, a q^{1-k}/b; q,p)_{n-k}
///   / (q, a q, b q^{1+2k}, a q/b; q,p)_{n-k},
/// and 0 outside 0 <= k <= n.
Complex elliptic_binom(int n, int k, const EllipticParams& ep);
WideComplex elliptic_binom(int n, int k, const WideParams& ep);

/// Relative residual, widened as in widening_residual, of
///   [n+1,k]_{a,b} = [n,k]_{aq^2,bq} prod_{j=1}^k W_{a,b}(j,1) + [n,k-1]_{aq,bq^2}.
double second_recurrence_residual(int n, int k, const EllipticParams& ep);

/// Relative residual, widened as in widening_residual, of the Pascal recursion
///   [n+1,k] = [n,k] + [n,k-1] W(k, n+1-k)
/// with elliptic big weights.
double pascal_recurrence_residual(int n, int k, const EllipticParams& ep);

/// Elliptic integer <n>_{aq^l, bq^{2l}; q,p}.
Complex elliptic_integer(int n, int level, const EllipticParams& ep);
WideComplex elliptic_integer(int n, int level, const WideParams& ep);

/// q-binomial coefficient (q^{1+k};q)_{n-k} / (q;q)_{n-k}, exact.
/// Throws DomainError when a denominator factor 1 - q^j vanishes.
Rational q_binom(int n, int k, const Rational& q);

/// (a;q)_n over the rationals with the same three-case convention as
/// qp_factorial.
Rational q_pochhammer(const Rational& a, int n, const Rational& q);

}  // namespace lucas_elliptica
