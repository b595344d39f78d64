// Normal-ordered elements of the weight-dependent algebra generated by x,
// x^-1 and y subject to
//
//   x x^-1 = x^-1 x = 1,   y x = w(1,1) x y,   x^-1 y = w(0,1) y x^-1,
//   x w(s,t) = w(s+1,t) x,   x^-1 w(s,t) = w(s-1,t) x^-1,   y w(s,t) = w(s,t+1) y.
//
// Every element is written uniquely as sum_{k,l} c(k,l) x^k y^l with the
// weights c(k,l) collected on the left.

#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "lucas_elliptica/weight_expr.hpp"
#include "lucas_elliptica/word_algebra.hpp"

namespace lucas_elliptica {

/// (x exponent, y exponent) of a normalized monomial x^k y^l.
struct NormalKey {
  int x;
  int y;  // >= 0

  bool operator==(const NormalKey&) const = default;
};

/// Descending x power, then ascending y power: "x^2 + x y + y^2".
struct NormalKeyOrder {
  bool operator()(const NormalKey& a, const NormalKey& b) const {
    return a.x != b.x ? a.x > b.x : a.y < b.y;
  }
};

class NormalPoly {
 public:
  using Terms = std::map<NormalKey, WeightExpr, NormalKeyOrder>;

  NormalPoly() = default;
  NormalPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  NormalPoly(NormalKey key, WeightExpr coeff);
  static NormalPoly monomial(int xexp, int yexp) {
    return NormalPoly({xexp, yexp}, WeightExpr(Rational(1)));
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^k y^l (zero when absent).
  WeightExpr coefficient(int xexp, int yexp) const;
  void add_term(NormalKey key, const WeightExpr& coeff);

  NormalPoly& operator+=(const NormalPoly& other);
  NormalPoly& operator-=(const NormalPoly& other);
  NormalPoly operator-() const;
  friend NormalPoly operator+(NormalPoly a, const NormalPoly& b) { return a += b; }
  friend NormalPoly operator-(NormalPoly a, const NormalPoly& b) { return a -= b; }
  friend NormalPoly operator*(const NormalPoly& a, const NormalPoly& b);
  bool operator==(const NormalPoly&) const = default;

  /// e.g. "(1 + w(1,1)) x y + y^3", "w(0,1)^-1 x^-1 y", "- x^-2 y".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Inverse of NormalPoly::to_string. Throws ParseError.
NormalPoly parse_normal_poly(std::string_view text);

/// Weight picked up by moving y^l across x^m:
///   y^l x^m = I(m,l) x^m y^l,
///   I(m,l) = prod_{i=1}^m W(i,l)            for m >= 0,
///   I(m,l) = prod_{i=m+1}^0 W(i,l)^{-1}     for m < 0.
WeightExpr interchange_weight(int m, int l);

NormalPoly mul_normal(const NormalPoly& u, const NormalPoly& v);

/// Normal form of a free-algebra element, built by peeling runs off the end
/// of each word.
NormalPoly normal_order(const WordPoly& u);

/// Weight-dependent binomial coefficient by the Pascal recursion
///   [n+1,k] = [n,k] + [n,k-1] W(k, n+1-k),  [0,0] = 1,
/// zero outside 0 <= k <= n. Memoized in a process-wide synchronized table.
WeightExpr weighted_binom(int n, int k);

/// Sum over monotone lattice paths (0,0) -> (k, n-k) of the product of
/// W(s,t) over east steps (s-1,t) -> (s,t).
WeightExpr lattice_path_oracle(int n, int k);

/// normal_order((x+y)^n) == sum_k weighted_binom(n,k) x^k y^{n-k}.
bool binomial_theorem_check(int n);

/// Image under the involution x -> x^-1, y -> x^-1 y, w(s,t) -> w(1-s-t,t)^-1.
NormalPoly dual_image(const NormalPoly& u);

/// Symbolic F_n(x, y | w) for every integer n:
///   n >= 0:  sum_k weighted_binom(n-k, k) x^k y^{n-2k},
///   n < 0:   (-1)^n dual_image(F_{-n-2}) x^-1.
NormalPoly fib_weighted(int n);

/// F_{m+n} == F_{m-1} x F_{n-1} + F_m F_n in the weighted algebra.
bool check_weighted_sum_formula(int m, int n);

/// (-1)^n F_k == dual(F_{n-2}) x^-1 F_{n+k} - dual(F_{n-1}) F_{n+k-1}, exact.
bool check_weighted_euler_cassini(int n, int k);

/// Normal-ordered polynomial with numeric coefficients.
template <typename Scalar>
using NumericNormalPoly = std::map<NormalKey, Scalar, NormalKeyOrder>;

template <typename Scalar>
NumericNormalPoly<Scalar> evaluate(const NormalPoly& u, const WeightEnv<Scalar>& env) {
  WeightEvaluator<Scalar> ev(env);
  NumericNormalPoly<Scalar> out;
  for (const auto& [key, c] : u.terms()) {
    Scalar v = ev(c);
    if (v != Scalar(0)) out.emplace(key, v);
  }
  return out;
}

/// F_n with coefficients evaluated under env.
template <typename Scalar>
NumericNormalPoly<Scalar> fib_weighted(int n, const WeightEnv<Scalar>& env) {
  return evaluate(fib_weighted(n), env);
}

std::string render_monomial(NormalKey key);
std::string scalar_to_string(const Rational& v);
std::string scalar_to_string(const Complex& v);

/// e.g. "5/3 x y + y^3" or "(0.25+1.5i) x y + y^3".
template <typename Scalar>
std::string to_string(const NumericNormalPoly<Scalar>& u) {
  if (u.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : u) {
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      negative = c < 0;
      coeff = scalar_to_string(negative ? Rational(-c) : c);
      if (coeff == "1" && (key.x != 0 || key.y != 0)) coeff.clear();
    } else {
      if (c != Scalar(1) || (key.x == 0 && key.y == 0)) coeff = "(" + scalar_to_string(c) + ")";
    }
    if (first) {
      if (negative) out += "- ";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = render_monomial(key);
    if (coeff.empty()) {
      out += mono;
    } else if (key.x == 0 && key.y == 0) {
      out += coeff;
    } else {
      out += coeff + " " + mono;
    }
  }
  return out;
}

}  // namespace lucas_elliptica
