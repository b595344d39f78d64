// Lucas sequences: the classical recurrence <n> = P<n-1> + Q<n-2>, the
// level-dependent system <n>_l = P_l <n-1>_{l+1} + Q_l <n-2>_{l+2} as
// polynomials in level-indexed variables, its elliptic solution, and the
// scaling transform.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lucas_elliptica/elliptic_core.hpp"
#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

/// <n> by iteration from <0> = 0, <1> = 1.
template <typename Scalar>
Scalar lucas_classical(int n, const Scalar& P, const Scalar& Q) {
  if (n < 0) {
    throw DomainError("lucas_classical: n must be nonnegative");
  }
  Scalar prev(0), cur(1);
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    Scalar next = P * cur + Q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct LevelVar {
  enum class Kind : std::uint8_t { P, Q };
  Kind kind;
  int level;

  auto operator<=>(const LevelVar&) const = default;
};

/// Integer polynomial in commuting variables P_l, Q_l. Monomials are sorted
/// variable lists (kind, then level); zero coefficients are never stored.
class CommutingPoly {
 public:
  using Monomial = std::vector<LevelVar>;
  using Terms = std::map<Monomial, Integer>;

  CommutingPoly() = default;
  static CommutingPoly constant(const Integer& c);
  static CommutingPoly variable(LevelVar v);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  CommutingPoly& operator+=(const CommutingPoly& other);
  friend CommutingPoly operator+(CommutingPoly lhs, const CommutingPoly& rhs) {
    return lhs += rhs;
  }
  friend CommutingPoly operator*(const CommutingPoly& lhs,
                                 const CommutingPoly& rhs);
  bool operator==(const CommutingPoly&) const = default;

  /// e.g. "P_0P_1P_2 + P_0Q_1 + P_2Q_0".
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Integer& c);
  Terms terms_;
};

/// Values of P_l and Q_l on every queried level.
template <typename Scalar>
struct LevelAssignment {
  std::function<Scalar(int)> P;
  std::function<Scalar(int)> Q;

  static LevelAssignment constant(Scalar p, Scalar q) {
    return {[p](int) { return p; }, [q](int) { return q; }};
  }
};

template <typename Scalar>
Scalar from_integer(const Integer& c) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return Complex(c.convert_to<double>());
  } else {
    return Scalar(c);
  }
}

/// Substitute an assignment into a CommutingPoly.
template <typename Scalar>
Scalar evaluate(const CommutingPoly& poly, const LevelAssignment<Scalar>& la) {
  Scalar total(0);
  for (const auto& [mono, coeff] : poly.terms()) {
    Scalar term = from_integer<Scalar>(coeff);
    for (const LevelVar& v : mono) {
      term *= v.kind == LevelVar::Kind::P ? la.P(v.level) : la.Q(v.level);
    }
    total += term;
  }
  return total;
}

/// <n>_level expanded in the variables P_{level+i}, Q_{level+j}, carrying
/// absolute level indices. <0>_l = 0 and <1>_l = 1 for every l.
CommutingPoly lucas_level_symbolic(int n, int level);

/// <n>_l computed numerically by the level-dependent recurrence.
template <typename Scalar>
Scalar lucas_level_numeric(int n, int level, const LevelAssignment<Scalar>& la) {
  if (n < 0 || level < 0) {
    throw DomainError("lucas_level_numeric: n and level must be nonnegative");
  }
  if (n == 0) return Scalar(0);
  // For the current m, cur[i] holds <m>_{level + i}, 0 <= i <= n - m.
  std::vector<Scalar> two_back(n + 1, Scalar(0)), one_back(n + 1, Scalar(1));
  for (int m = 2; m <= n; ++m) {
    std::vector<Scalar> cur(n + 1, Scalar(0));
    for (int l = level; l <= level + n - m; ++l) {
      const int i = l - level;
      cur[i] = la.P(l) * one_back[i + 1] + la.Q(l) * two_back[i + 2];
    }
    two_back = std::move(one_back);
    one_back = std::move(cur);
  }
  return one_back[0];
}

/// (P_l, Q_l) of the elliptic solution:
///   P_l = theta(q^2, a q^{l+2}, b q^{2l+2}, a q^{-l}/b)
///       / theta(q, a q^{l+1}, b q^{2l+3}, a q^{1-l}/b),
///   Q_l = -theta(a q^{l+3}, b q^{2l+1}, a q^{-1-l}/b)
///       / theta(a q^{l+1}, b q^{2l+3}, a q^{1-l}/b) * q.
std::pair<Complex, Complex> elliptic_PQ(int level, const EllipticParams& ep);

LevelAssignment<Complex> elliptic_assignment(const EllipticParams& ep);

/// Max over 2 <= n <= n_max, 0 <= l <= l_max of the relative residual of
/// <n>_l = P_l <n-1>_{l+1} + Q_l <n-2>_{l+2} with every quantity taken
/// from its closed form, each (n, l) widened as in widening_residual.
double verify_elliptic_solution(int n_max, int l_max, const EllipticParams& ep);

/// P~_l = c_l P_l, Q~_l = c_l c_{l+1} Q_l.
template <typename Scalar>
LevelAssignment<Scalar> scale_transform(std::function<Scalar(int)> c,
                                        const LevelAssignment<Scalar>& la) {
  return {[c, P = la.P](int l) { return c(l) * P(l); },
          [c, Q = la.Q](int l) { return c(l) * c(l + 1) * Q(l); }};
}

/// c_l c_{l+1} ... c_{l+n-2}, the factor relating scaled and unscaled <n>_l.
template <typename Scalar>
Scalar scaling_factor(const std::function<Scalar(int)>& c, int n, int level) {
  Scalar f(1);
  for (int i = 0; i <= n - 2; ++i) f *= c(level + i);
  return f;
}

}  // namespace lucas_elliptica
