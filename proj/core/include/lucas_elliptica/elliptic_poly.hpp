// Normal-ordered polynomials whose coefficients are functions of the
// elliptic parameters. Multiplication transports coefficients across x and y
// by reparametrizing (a, b) instead of shifting weight symbols, so values
// computed here never pass through WeightExpr.

#pragma once

#include <algorithm>
#include <functional>
#include <map>

#include "lucas_elliptica/elliptic_core.hpp"
#include "lucas_elliptica/weighted_algebra.hpp"

namespace lucas_elliptica {

template <typename C>
class BasicEllipticPoly {
 public:
  using Params = BasicEllipticParams<C>;
  using Coefficient = std::function<C(const Params&)>;
  using Terms = std::map<NormalKey, Coefficient, NormalKeyOrder>;

  BasicEllipticPoly() = default;
  static BasicEllipticPoly constant(C c);
  static BasicEllipticPoly monomial(int xexp, int yexp);

  const Terms& terms() const { return terms_; }
  void add_term(NormalKey key, Coefficient c);

  BasicEllipticPoly operator-() const;
  friend BasicEllipticPoly operator+(const BasicEllipticPoly& a, const BasicEllipticPoly& b) {
    BasicEllipticPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
  }
  friend BasicEllipticPoly operator-(const BasicEllipticPoly& a, const BasicEllipticPoly& b) {
    return a + (-b);
  }
  friend BasicEllipticPoly operator*(const BasicEllipticPoly& a, const BasicEllipticPoly& b) {
    return a.times(b);
  }

  /// Left multiplication by the coefficient function c.
  BasicEllipticPoly scaled(Coefficient c) const;

  NumericNormalPoly<C> evaluate(const Params& ep) const;

 private:
  BasicEllipticPoly times(const BasicEllipticPoly& b) const;

  Terms terms_;
};

using EllipticPoly = BasicEllipticPoly<Complex>;
using WideEllipticPoly = BasicEllipticPoly<WideComplex>;

extern template class BasicEllipticPoly<Complex>;
extern template class BasicEllipticPoly<WideComplex>;

/// y^l x^m = I(m,l) x^m y^l with I built from closed-form big weights.
Complex interchange_value(const EllipticParams& ep, int m, int l);
WideComplex interchange_value(const WideParams& ep, int m, int l);

/// Elliptic Fibonacci polynomial with coefficients elliptic_binom(n-k, k) for
/// n >= 0 and (-1)^n F_{-n-2}(x^-1, x^-1 y | a/b, 1/b) x^-1 for n < 0.
template <typename C>
BasicEllipticPoly<C> basic_fib_elliptic(int n);

/// F_n(x^-1, x^-1 y) with coefficients evaluated at the dual parameters.
template <typename C>
BasicEllipticPoly<C> basic_dual_fib_elliptic(int n);

extern template EllipticPoly basic_fib_elliptic<Complex>(int);
extern template WideEllipticPoly basic_fib_elliptic<WideComplex>(int);
extern template EllipticPoly basic_dual_fib_elliptic<Complex>(int);
extern template WideEllipticPoly basic_dual_fib_elliptic<WideComplex>(int);

inline EllipticPoly fib_elliptic(int n) { return basic_fib_elliptic<Complex>(n); }
inline EllipticPoly dual_fib_elliptic(int n) { return basic_dual_fib_elliptic<Complex>(n); }

/// Largest coefficient residual of
///   (-1)^n F_k = F~_{n-2} x^-1 F_{n+k} - F~_{n-1} F_{n+k-1}
/// at ep, as max_coefficient_residual of the two sides, widened as in
/// widening_residual: the two products can carry coefficients near 1e12
/// that cancel to 0 or 1. Throws SingularValue near poles.
double check_elliptic_euler_cassini(int n, int k, const EllipticParams& ep);

/// Largest relative residual between two numeric polynomials, taken over the
/// union of their supports.
template <typename C>
double max_coefficient_residual(const NumericNormalPoly<C>& lhs,
                                const NumericNormalPoly<C>& rhs) {
  double worst = 0.0;
  for (const auto& [k, v] : lhs) {
    auto it = rhs.find(k);
    worst = std::max(worst, relative_residual(v, it == rhs.end() ? C(0) : it->second));
  }
  for (const auto& [k, v] : rhs) {
    if (!lhs.contains(k)) worst = std::max(worst, relative_residual(C(0), v));
  }
  return worst;
}

}  // namespace lucas_elliptica
