#include "lucas_elliptica/weight_expr.hpp"

#include <algorithm>
#include <sstream>

#include "parse_detail.hpp"

namespace lucas_elliptica {

// ------------------------------------------------------- WeightMonomial

WeightMonomial WeightMonomial::symbol(int s, int t, int exponent) {
  if (t < 1) {
    throw DomainError("weight symbol w(" + std::to_string(s) + "," +
                      std::to_string(t) + ") needs t >= 1");
  }
  WeightMonomial m;
  m.multiply_factor({s, t}, exponent);
  return m;
}

void WeightMonomial::multiply_factor(WeightSymbol sym, int exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), sym,
      [](const Factor& f, const WeightSymbol& key) { return f.first < key; });
  if (it != factors_.end() && it->first == sym) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  } else {
    factors_.insert(it, {sym, exponent});
  }
}

WeightMonomial operator*(const WeightMonomial& a, const WeightMonomial& b) {
  WeightMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) out.factors_.push_back({i->first, e});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

WeightMonomial WeightMonomial::inverse() const {
  WeightMonomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

WeightMonomial WeightMonomial::shifted(int ds, int dt) const {
  WeightMonomial out = *this;
  for (auto& [sym, e] : out.factors_) {
    sym.s += ds;
    sym.t += dt;
    if (sym.t < 1) throw DomainError("weight shift produced t < 1");
  }
  return out;
}

WeightMonomial WeightMonomial::dual() const {
  WeightMonomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& [sym, e] : factors_) {
    out.factors_.push_back({{1 - sym.s - sym.t, sym.t}, -e});
  }
  std::sort(out.factors_.begin(), out.factors_.end());
  return out;
}

std::string WeightMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [sym, e] : factors_) {
    out += "w(" + std::to_string(sym.s) + "," + std::to_string(sym.t) + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ----------------------------------------------------------- WeightExpr

WeightExpr::WeightExpr(const Rational& c) {
  if (c != 0) terms_.emplace(WeightMonomial{}, c);
}

WeightExpr::WeightExpr(WeightMonomial m, const Rational& c) {
  if (c != 0) terms_.emplace(std::move(m), c);
}

bool WeightExpr::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

void WeightExpr::add_term(const WeightMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightExpr& WeightExpr::operator+=(const WeightExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WeightExpr& WeightExpr::operator-=(const WeightExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WeightExpr WeightExpr::operator-() const {
  WeightExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

WeightExpr operator*(const WeightExpr& a, const WeightExpr& b) {
  WeightExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

WeightExpr WeightExpr::shifted(int ds, int dt) const {
  if (ds == 0 && dt == 0) return *this;
  WeightExpr out;
  // Shifting is monotone in (s, t), so map order is preserved.
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), m.shifted(ds, dt), c);
  }
  return out;
}

std::string WeightExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "- ";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << ' ';
      os << m.to_string();
    }
  }
  return os.str();
}

namespace detail {

WeightMonomial parse_weight_factors(Lexer& lex, bool& any) {
  WeightMonomial m;
  while (lex.accept('w')) {
    lex.expect('(');
    const auto s = static_cast<int>(lex.integer());
    lex.expect(',');
    const auto t = static_cast<int>(lex.integer());
    lex.expect(')');
    int e = 1;
    if (lex.accept('^')) e = static_cast<int>(lex.integer());
    if (t < 1) lex.fail("weight symbol needs t >= 1");
    m = m * WeightMonomial::symbol(s, t, e);
    any = true;
  }
  return m;
}

WeightExpr parse_weight_sum(Lexer& lex) {
  if (lex.at_end() || lex.peek() == ')') lex.fail("empty weight expression");
  WeightExpr out;
  bool first = true;
  while (!lex.at_end() && lex.peek() != ')') {
    Rational sign(1);
    if (lex.accept('-')) {
      sign = -1;
    } else if (!lex.accept('+') && !first) {
      lex.fail("expected '+' or '-' between terms");
    }
    first = false;
    Rational coeff(1);
    bool any = false;
    if (lex.at_digit()) {
      coeff = lex.rational();
      any = true;
    }
    const WeightMonomial m = parse_weight_factors(lex, any);
    if (!any) lex.fail("expected a term");
    out.add_term(m, sign * coeff);
  }
  return out;
}

}  // namespace detail

WeightExpr parse_weight_expr(std::string_view text) {
  detail::Lexer lex(text);
  WeightExpr out = detail::parse_weight_sum(lex);
  if (!lex.at_end()) lex.fail("unexpected trailing input");
  return out;
}

WeightExpr big_weight_expr(int s, int t) {
  if (t < 0) throw DomainError("big_weight_expr: t must be nonnegative");
  WeightMonomial m;
  for (int j = 1; j <= t; ++j) m = m * WeightMonomial::symbol(s, j);
  return WeightExpr(m);
}

WeightExpr dual_weight_map(const WeightExpr& e) {
  WeightExpr out;
  for (const auto& [m, c] : e.terms()) out.add_term(m.dual(), c);
  return out;
}

WeightEnv<Complex> elliptic_env(const EllipticParams& ep) {
  ep.validate();
  return {WeightEnv<Complex>::Kind::kElliptic,
          [ep](WeightSymbol sym) { return small_weight(ep, sym.s, sym.t); }};
}

WeightEnv<WideComplex> elliptic_env(const WideParams& ep) {
  ep.validate();
  return {WeightEnv<WideComplex>::Kind::kElliptic,
          [ep](WeightSymbol sym) { return small_weight(ep, sym.s, sym.t); }};
}

}  // namespace lucas_elliptica
