// Modified Jacobi theta function
//
//   theta(z;p) = prod_{j>=0} (1 - p^j z)(1 - p^{j+1}/z),   |p| < 1,
//
// products of theta functions, theta shifted factorials (a;q,p)_n, and
// residual evaluators for the inversion, quasi-periodicity and addition
// identities.
//
// The product is truncated at the first index J with
// |p|^J * max(|z|, 1/|z|) < truncation_eps; the neglected tail then has
// relative size below roughly truncation_eps / (1 - |p|).

#pragma once

#include <concepts>
#include <initializer_list>
#include <span>

#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

struct ThetaConfig {
  double truncation_eps = 1e-16;
  double zero_guard = 1e-12;

  /// Throws DomainError unless both fields lie in (0, 1).
  void validate() const;
};

Complex theta(Complex z, Complex p, const ThetaConfig& cfg = {});
/// Same product in 113-bit arithmetic; pair with a truncation_eps near 1e-34.
/// Constrained so that double arguments never convert to it.
template <std::same_as<WideComplex> C>
C theta(const C& z, const C& p, const ThetaConfig& cfg = {});

/// theta(z_1;p) * ... * theta(z_m;p), left to right. Empty product is 1.
Complex theta_product(std::span<const Complex> zs, Complex p,
                      const ThetaConfig& cfg = {});
Complex theta_product(std::initializer_list<Complex> zs, Complex p,
                      const ThetaConfig& cfg = {});

/// Quotient of two theta products. Throws SingularValue when any
/// denominator factor has modulus below cfg.zero_guard.
Complex theta_quotient(std::initializer_list<Complex> numerator,
                       std::initializer_list<Complex> denominator, Complex p,
                       const ThetaConfig& cfg = {});
template <std::same_as<WideComplex> C>
C theta_quotient(std::initializer_list<C> numerator, std::initializer_list<C> denominator,
                 const C& p, const ThetaConfig& cfg = {});

/// Theta shifted factorial (a;q,p)_n for any integer n:
///   n > 0:  prod_{j=0}^{n-1} theta(a q^j; p)
///   n = 0:  1
///   n < 0:  1 / prod_{j=0}^{-n-1} theta(a q^{n+j}; p)
Complex qp_factorial(Complex a, int n, Complex q, Complex p,
                     const ThetaConfig& cfg = {});
template <std::same_as<WideComplex> C>
C qp_factorial(const C& a, int n, const C& q, const C& p, const ThetaConfig& cfg = {});

struct ThetaResiduals {
  double inversion = 0.0;
  double quasi_periodicity = 0.0;
  double addition = 0.0;
};

/// Symmetric relative residuals of
///   theta(z) = -z theta(1/z),
///   theta(pz) = -theta(z)/z,
///   theta(uv,u/v,wz,w/z) - theta(uz,u/z,wv,w/v) = (w/v) theta(vz,v/z,uw,u/w).
ThetaResiduals identity_residuals(Complex z, Complex u, Complex v, Complex w,
                                  Complex p, const ThetaConfig& cfg = {});

double inversion_residual(Complex z, Complex p, const ThetaConfig& cfg = {});
double quasi_periodicity_residual(Complex z, Complex p,
                                  const ThetaConfig& cfg = {});
double addition_residual(Complex u, Complex v, Complex w, Complex z, Complex p,
                         const ThetaConfig& cfg = {});

}  // namespace lucas_elliptica
