// Symbolic weights w(s,t), s in Z, t >= 1, and exact Laurent polynomials in
// them, together with the environments that turn them into numbers.

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lucas_elliptica/elliptic_core.hpp"
#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

struct WeightSymbol {
  int s;
  int t;  // always >= 1

  auto operator<=>(const WeightSymbol&) const = default;
};

/// Product of symbols raised to nonzero integer powers, sorted by (s, t).
class WeightMonomial {
 public:
  using Factor = std::pair<WeightSymbol, int>;

  WeightMonomial() = default;
  /// Throws DomainError when t < 1.
  static WeightMonomial symbol(int s, int t, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  friend WeightMonomial operator*(const WeightMonomial& a, const WeightMonomial& b);
  WeightMonomial inverse() const;
  /// w(s,t) -> w(s + ds, t + dt) on every factor.
  WeightMonomial shifted(int ds, int dt) const;
  /// w(s,t)^e -> w(1-s-t, t)^{-e}.
  WeightMonomial dual() const;

  auto operator<=>(const WeightMonomial&) const = default;

  /// e.g. "w(1,1)w(-1,1)^-1"; the empty monomial renders as "1".
  std::string to_string() const;

 private:
  void multiply_factor(WeightSymbol sym, int exponent);
  std::vector<Factor> factors_;
};

/// Exact rational combination of weight monomials. Zero coefficients are
/// never stored.
class WeightExpr {
 public:
  using Terms = std::map<WeightMonomial, Rational>;

  WeightExpr() = default;
  WeightExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit WeightExpr(WeightMonomial m, const Rational& c = 1);
  static WeightExpr symbol(int s, int t, int exponent = 1) {
    return WeightExpr(WeightMonomial::symbol(s, t, exponent));
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  void add_term(const WeightMonomial& m, const Rational& c);

  WeightExpr& operator+=(const WeightExpr& other);
  WeightExpr& operator-=(const WeightExpr& other);
  WeightExpr operator-() const;
  friend WeightExpr operator+(WeightExpr a, const WeightExpr& b) { return a += b; }
  friend WeightExpr operator-(WeightExpr a, const WeightExpr& b) { return a -= b; }
  friend WeightExpr operator*(const WeightExpr& a, const WeightExpr& b);
  bool operator==(const WeightExpr&) const = default;

  WeightExpr shifted(int ds, int dt) const;

  /// e.g. "1 + w(1,1) + w(1,1)w(1,2)"; coefficients other than 1 precede the
  /// monomial separated by a space ("2 w(0,1)^-1").
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Inverse of WeightExpr::to_string. Throws ParseError.
WeightExpr parse_weight_expr(std::string_view text);

/// W(s,t) = w(s,1) w(s,2) ... w(s,t); W(s,0) = 1.
WeightExpr big_weight_expr(int s, int t);

/// Image under w(s,t) -> w(1-s-t, t)^{-1}. Involutive.
WeightExpr dual_weight_map(const WeightExpr& e);

/// Numeric realization of the weights. Values must be nonzero.
template <typename Scalar>
struct WeightEnv {
  enum class Kind { kQMode, kElliptic, kCustom };

  Kind kind = Kind::kCustom;
  std::function<Scalar(WeightSymbol)> eval;

  /// w(s,t) = q for all (s,t): the p -> 0, a -> 0, b -> 0 degeneration.
  static WeightEnv q_mode(Scalar q) {
    return {Kind::kQMode, [q](WeightSymbol) { return q; }};
  }
  static WeightEnv custom(std::function<Scalar(WeightSymbol)> fn) {
    return {Kind::kCustom, std::move(fn)};
  }
  /// All weights equal to 1: the free algebra with commuting x and y.
  static WeightEnv trivial() { return q_mode(Scalar(1)); }
};

/// w(s,t) = small elliptic weight at ep.
WeightEnv<Complex> elliptic_env(const EllipticParams& ep);
WeightEnv<WideComplex> elliptic_env(const WideParams& ep);

namespace detail {

struct SymbolHash {
  std::size_t operator()(const WeightSymbol& s) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(s.s) << 32) ^
                                  static_cast<unsigned>(s.t));
  }
};

template <typename Scalar>
Scalar to_scalar(const Rational& c) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return Complex(c.template convert_to<double>());
  } else if constexpr (std::is_same_v<Scalar, WideComplex>) {
    using Real = typename WideComplex::value_type;
    return WideComplex(c.template convert_to<Real>());
  } else {
    return Scalar(c);
  }
}

}  // namespace detail

/// Memoizes env lookups across many evaluations; not thread-safe, create one
/// per thread.
template <typename Scalar>
class WeightEvaluator {
 public:
  explicit WeightEvaluator(WeightEnv<Scalar> env) : env_(std::move(env)) {}

  Scalar symbol(WeightSymbol sym) {
    if (auto it = cache_.find(sym); it != cache_.end()) return it->second;
    if (sym.t < 1) {
      throw EnvDomainError("weight symbol with t < 1");
    }
    if (!env_.eval) {
      throw EnvDomainError("weight environment has no evaluator");
    }
    Scalar v = env_.eval(sym);
    if (v == Scalar(0)) {
      throw EnvDomainError("weight environment vanishes at w(" +
                           std::to_string(sym.s) + "," + std::to_string(sym.t) +
                           ")");
    }
    cache_.emplace(sym, v);
    return v;
  }

  Scalar operator()(const WeightMonomial& m) {
    Scalar v(1);
    for (const auto& [sym, e] : m.factors()) v *= ipow(symbol(sym), e);
    return v;
  }

  Scalar operator()(const WeightExpr& e) {
    Scalar total(0);
    for (const auto& [m, c] : e.terms()) total += detail::to_scalar<Scalar>(c) * (*this)(m);
    return total;
  }

 private:
  WeightEnv<Scalar> env_;
  std::unordered_map<WeightSymbol, Scalar, detail::SymbolHash> cache_;
};

/// Sum over monomials of coefficient times the product of env values.
template <typename Scalar>
Scalar evaluate(const WeightExpr& e, const WeightEnv<Scalar>& env) {
  WeightEvaluator<Scalar> ev(env);
  return ev(e);
}

}  // namespace lucas_elliptica
