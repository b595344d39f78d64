#include "lucas_elliptica/scalar_theta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lucas_elliptica {

namespace {

// Guards against |p| so close to 1 that the product would never terminate
// in reasonable time; |p| = 1 - 1e-9 already needs ~4e10 factors.
constexpr long kMaxFactors = 50'000'000;

template <typename C>
auto modulus(const C& z) {
  using std::abs;
  return abs(z);
}

template <typename C>
bool is_finite(const C& z) {
  using std::isfinite;
  return isfinite(z.real()) && isfinite(z.imag());
}

std::string describe(const Complex& z) { return to_string(z); }
std::string describe(const WideComplex& z) { return to_string(narrow(z)); }

template <typename C>
void check_nome(const C& p) {
  if (!(modulus(p) < 1)) {
    throw DomainError("theta: nome must satisfy |p| < 1, got |p| = " +
                      to_string(static_cast<double>(modulus(p))));
  }
}

template <typename C>
C checked_finite(const C& value, const char* what) {
  if (!is_finite(value)) {
    throw DomainError(std::string(what) + ": result is not finite");
  }
  return value;
}

template <typename C>
C theta_impl(const C& z, const C& p, const ThetaConfig& cfg) {
  cfg.validate();
  if (!is_finite(z) || !is_finite(p)) {
    throw DomainError("theta: arguments must be finite");
  }
  if (z == C(0)) {
    throw DomainError("theta: argument z must be nonzero");
  }
  check_nome(p);

  const C zinv = C(1) / z;
  const auto scale = std::max(modulus(z), modulus(zinv));
  const auto abs_p = modulus(p);

  C result(1);
  C pj(1);  // p^j
  decltype(modulus(p)) abs_pj(1);
  for (long j = 0; abs_pj * scale >= cfg.truncation_eps; ++j) {
    if (j >= kMaxFactors) {
      throw DomainError("theta: nome too close to the unit circle");
    }
    const C pj1 = pj * p;
    result *= (C(1) - pj * z) * (C(1) - pj1 * zinv);
    pj = pj1;
    abs_pj *= abs_p;
  }
  return checked_finite(result, "theta");
}

template <typename C>
C theta_product_impl(std::span<const C> zs, const C& p, const ThetaConfig& cfg) {
  check_nome(p);
  C result(1);
  for (const C& z : zs) {
    result *= theta_impl(z, p, cfg);
  }
  return checked_finite(result, "theta_product");
}

template <typename C>
C theta_quotient_impl(std::initializer_list<C> numerator,
                      std::initializer_list<C> denominator, const C& p,
                      const ThetaConfig& cfg) {
  C den(1);
  for (const C& z : denominator) {
    const C t = theta_impl(z, p, cfg);
    if (modulus(t) < cfg.zero_guard) {
      throw SingularValue("theta quotient: denominator factor theta(" +
                          describe(z) + ") below zero guard");
    }
    den *= t;
  }
  const C num = theta_product_impl(std::span<const C>(numerator.begin(), numerator.size()), p, cfg);
  return checked_finite(C(num / den), "theta_quotient");
}

template <typename C>
C qp_factorial_impl(const C& a, int n, const C& q, const C& p, const ThetaConfig& cfg) {
  check_nome(p);
  if (n == 0) {
    return C(1);
  }
  if (n > 0) {
    C result(1);
    C aqj = a;
    for (int j = 0; j < n; ++j) {
      result *= theta_impl(aqj, p, cfg);
      aqj *= q;
    }
    return checked_finite(result, "qp_factorial");
  }
  C den(1);
  C aqj = a * ipow(q, n);
  for (int j = 0; j < -n; ++j) {
    const C t = theta_impl(aqj, p, cfg);
    if (modulus(t) < cfg.zero_guard) {
      throw SingularValue("qp_factorial: denominator factor theta(" +
                          describe(aqj) + ") below zero guard");
    }
    den *= t;
    aqj *= q;
  }
  return checked_finite(C(C(1) / den), "qp_factorial");
}

}  // namespace

void ThetaConfig::validate() const {
  if (!(truncation_eps > 0.0 && truncation_eps < 1.0)) {
    throw DomainError("ThetaConfig: truncation_eps must lie in (0, 1)");
  }
  if (!(zero_guard > 0.0 && zero_guard < 1.0)) {
    throw DomainError("ThetaConfig: zero_guard must lie in (0, 1)");
  }
}

Complex theta(Complex z, Complex p, const ThetaConfig& cfg) {
  return theta_impl(z, p, cfg);
}

template <std::same_as<WideComplex> C>
C theta(const C& z, const C& p, const ThetaConfig& cfg) {
  return theta_impl(z, p, cfg);
}
template WideComplex theta<WideComplex>(const WideComplex&, const WideComplex&,
                                        const ThetaConfig&);

Complex theta_product(std::span<const Complex> zs, Complex p,
                      const ThetaConfig& cfg) {
  return theta_product_impl(zs, p, cfg);
}

Complex theta_product(std::initializer_list<Complex> zs, Complex p,
                      const ThetaConfig& cfg) {
  return theta_product(std::span<const Complex>(zs.begin(), zs.size()), p, cfg);
}

Complex theta_quotient(std::initializer_list<Complex> numerator,
                       std::initializer_list<Complex> denominator, Complex p,
                       const ThetaConfig& cfg) {
  return theta_quotient_impl(numerator, denominator, p, cfg);
}

template <std::same_as<WideComplex> C>
C theta_quotient(std::initializer_list<C> numerator, std::initializer_list<C> denominator,
                 const C& p, const ThetaConfig& cfg) {
  return theta_quotient_impl(numerator, denominator, p, cfg);
}
template WideComplex theta_quotient<WideComplex>(std::initializer_list<WideComplex>,
                                                 std::initializer_list<WideComplex>,
                                                 const WideComplex&, const ThetaConfig&);

Complex qp_factorial(Complex a, int n, Complex q, Complex p,
                     const ThetaConfig& cfg) {
  return qp_factorial_impl(a, n, q, p, cfg);
}

template <std::same_as<WideComplex> C>
C qp_factorial(const C& a, int n, const C& q, const C& p, const ThetaConfig& cfg) {
  return qp_factorial_impl(a, n, q, p, cfg);
}
template WideComplex qp_factorial<WideComplex>(const WideComplex&, int, const WideComplex&,
                                               const WideComplex&, const ThetaConfig&);

double inversion_residual(Complex z, Complex p, const ThetaConfig& cfg) {
  return relative_residual(theta(z, p, cfg), -z * theta(1.0 / z, p, cfg));
}

double quasi_periodicity_residual(Complex z, Complex p, const ThetaConfig& cfg) {
  return relative_residual(theta(p * z, p, cfg), -theta(z, p, cfg) / z);
}

double addition_residual(Complex u, Complex v, Complex w, Complex z, Complex p,
                         const ThetaConfig& cfg) {
  const Complex lhs = theta_product({u * v, u / v, w * z, w / z}, p, cfg) -
                      theta_product({u * z, u / z, w * v, w / v}, p, cfg);
  const Complex rhs =
      (w / v) * theta_product({v * z, v / z, u * w, u / w}, p, cfg);
  return relative_residual(lhs, rhs);
}

ThetaResiduals identity_residuals(Complex z, Complex u, Complex v, Complex w,
                                  Complex p, const ThetaConfig& cfg) {
  return {inversion_residual(z, p, cfg), quasi_periodicity_residual(z, p, cfg),
          addition_residual(u, v, w, z, p, cfg)};
}

}  // namespace lucas_elliptica
