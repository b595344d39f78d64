#include "lucas_elliptica/lucas_dynamical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lucas_elliptica {

CommutingPoly CommutingPoly::constant(const Integer& c) {
  CommutingPoly out;
  out.add_term({}, c);
  return out;
}

CommutingPoly CommutingPoly::variable(LevelVar v) {
  CommutingPoly out;
  out.add_term({v}, Integer(1));
  return out;
}

void CommutingPoly::add_term(Monomial m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommutingPoly& CommutingPoly::operator+=(const CommutingPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CommutingPoly operator*(const CommutingPoly& lhs, const CommutingPoly& rhs) {
  CommutingPoly out;
  for (const auto& [m1, c1] : lhs.terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      CommutingPoly::Monomial m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(),
                 std::back_inserter(m));
      out.add_term(std::move(m), c1 * c2);
    }
  }
  return out;
}

std::string CommutingPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) os << "- ";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = negative ? Integer(-coeff) : coeff;
    if (mono.empty() || mag != 1) os << mag;
    // Runs of the same variable are written with a caret exponent.
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      os << (mono[i].kind == LevelVar::Kind::P ? "P_" : "Q_") << mono[i].level;
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
  }
  return os.str();
}

namespace {

CommutingPoly lucas_level_memo(int n, int level,
                               std::map<std::pair<int, int>, CommutingPoly>& memo) {
  if (n == 0) return CommutingPoly{};
  if (n == 1) return CommutingPoly::constant(1);
  const auto key = std::make_pair(n, level);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  CommutingPoly result =
      CommutingPoly::variable({LevelVar::Kind::P, level}) *
          lucas_level_memo(n - 1, level + 1, memo) +
      CommutingPoly::variable({LevelVar::Kind::Q, level}) *
          lucas_level_memo(n - 2, level + 2, memo);
  memo.emplace(key, result);
  return result;
}

}  // namespace

CommutingPoly lucas_level_symbolic(int n, int level) {
  if (n < 0 || level < 0) {
    throw DomainError("lucas_level_symbolic: n and level must be nonnegative");
  }
  std::map<std::pair<int, int>, CommutingPoly> memo;
  return lucas_level_memo(n, level, memo);
}

namespace {

template <typename C>
std::pair<C, C> elliptic_PQ_impl(int level, const BasicEllipticParams<C>& ep) {
  const C a = ep.a, b = ep.b, q = ep.q;
  const int l = level;
  const C P = theta_quotient(
      {C(q * q), C(a * ipow(q, l + 2)), C(b * ipow(q, 2 * l + 2)), C(a * ipow(q, -l) / b)},
      {q, C(a * ipow(q, l + 1)), C(b * ipow(q, 2 * l + 3)), C(a * ipow(q, 1 - l) / b)},
      ep.p, ep.theta_cfg);
  const C Q = -theta_quotient(
                  {C(a * ipow(q, l + 3)), C(b * ipow(q, 2 * l + 1)), C(a * ipow(q, -1 - l) / b)},
                  {C(a * ipow(q, l + 1)), C(b * ipow(q, 2 * l + 3)), C(a * ipow(q, 1 - l) / b)},
                  ep.p, ep.theta_cfg) *
              q;
  return {P, Q};
}

template <typename C>
double lucas_step_at(int n, int l, const BasicEllipticParams<C>& ep) {
  const auto [P, Q] = elliptic_PQ_impl(l, ep);
  return relative_residual(elliptic_integer(n, l, ep),
                           C(P * elliptic_integer(n - 1, l + 1, ep) +
                             Q * elliptic_integer(n - 2, l + 2, ep)));
}

}  // namespace

std::pair<Complex, Complex> elliptic_PQ(int level, const EllipticParams& ep) {
  return elliptic_PQ_impl(level, ep);
}

LevelAssignment<Complex> elliptic_assignment(const EllipticParams& ep) {
  return {[ep](int l) { return elliptic_PQ(l, ep).first; },
          [ep](int l) { return elliptic_PQ(l, ep).second; }};
}

double verify_elliptic_solution(int n_max, int l_max, const EllipticParams& ep) {
  if (n_max < 2 || l_max < 0) {
    throw DomainError("verify_elliptic_solution: need n_max >= 2, l_max >= 0");
  }
  double worst = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    for (int n = 2; n <= n_max; ++n) {
      worst = std::max(worst, widening_residual(ep, [&](const auto& e) {
                         return lucas_step_at(n, l, e);
                       }));
    }
  }
  return worst;
}

}  // namespace lucas_elliptica
