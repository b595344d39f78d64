// Scalar types and error classes shared by every module.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace lucas_elliptica {

using Complex = std::complex<double>;
/// 113-bit complex for identities whose two sides are assembled from terms
/// many orders of magnitude larger than the difference being tested.
using WideComplex = boost::multiprecision::cpp_complex_quad;
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// An argument lies outside the domain of a function (|p| >= 1, z = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theta factor in a denominator fell below the configured zero guard.
class SingularValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight environment is undefined or zero at a requested symbol.
class EnvDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Text could not be parsed into an algebraic object.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// x^n for integer n by repeated squaring; n < 0 inverts.
template <typename T>
T ipow(T base, long long n) {
  if (n < 0) {
    return T(1) / ipow(base, -n);
  }
  T result(1);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

inline Complex narrow(const WideComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline WideComplex widen(const Complex& z) { return {z.real(), z.imag()}; }

/// Symmetric relative residual |l - r| / (|l| + |r| + 1), stable near zeros.
inline double relative_residual(const Complex& lhs, const Complex& rhs) {
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

inline double relative_residual(const WideComplex& lhs, const WideComplex& rhs) {
  return static_cast<double>(abs(lhs - rhs) / (abs(lhs) + abs(rhs) + 1));
}

/// Shortest round-trip decimal; complex values as "RE+IMi" ("RE" when the
/// imaginary part is zero).
std::string to_string(const Complex& z);
std::string to_string(double x);

/// Accepts "RE", "RE+IMi", "RE-IMi", "IMi". Throws ParseError.
Complex parse_complex(std::string_view text);

}  // namespace lucas_elliptica
