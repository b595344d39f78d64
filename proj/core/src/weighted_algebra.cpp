#include "lucas_elliptica/weighted_algebra.hpp"

#include <mutex>
#include <vector>

#include "parse_detail.hpp"

namespace lucas_elliptica {

// ------------------------------------------------------------ NormalPoly

NormalPoly::NormalPoly(const Rational& c) {
  if (c != 0) terms_.emplace(NormalKey{0, 0}, WeightExpr(c));
}

NormalPoly::NormalPoly(NormalKey key, WeightExpr coeff) {
  add_term(key, coeff);
}

WeightExpr NormalPoly::coefficient(int xexp, int yexp) const {
  auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? WeightExpr{} : it->second;
}

void NormalPoly::add_term(NormalKey key, const WeightExpr& coeff) {
  if (key.y < 0) {
    throw DomainError("NormalPoly: negative power of y");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

NormalPoly NormalPoly::operator-() const {
  NormalPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

WeightExpr interchange_weight(int m, int l) {
  WeightMonomial mono;
  if (m >= 0) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= l; ++j) mono = mono * WeightMonomial::symbol(i, j);
    }
  } else {
    for (int i = m + 1; i <= 0; ++i) {
      for (int j = 1; j <= l; ++j) mono = mono * WeightMonomial::symbol(i, j, -1);
    }
  }
  return WeightExpr(mono);
}

NormalPoly operator*(const NormalPoly& a, const NormalPoly& b) {
  NormalPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // ca x^ka.x y^ka.y cb x^kb.x y^kb.y: move cb left, then swap y^ka.y
      // past x^kb.x and move the exchange weight past x^ka.x.
      WeightExpr coeff = ca * cb.shifted(ka.x, ka.y);
      if (ka.y != 0 && kb.x != 0) {
        coeff = coeff * interchange_weight(kb.x, ka.y).shifted(ka.x, 0);
      }
      out.add_term({ka.x + kb.x, ka.y + kb.y}, coeff);
    }
  }
  return out;
}

NormalPoly mul_normal(const NormalPoly& u, const NormalPoly& v) { return u * v; }

NormalPoly normal_order(const WordPoly& u) {
  NormalPoly out;
  for (const auto& [word, c] : u.terms()) {
    NormalPoly acc(Rational(1));
    for (const Word::Run& r : word.runs()) {
      acc = acc * (r.is_x ? NormalPoly::monomial(r.exponent, 0)
                          : NormalPoly::monomial(0, r.exponent));
    }
    for (const auto& [key, w] : acc.terms()) out.add_term(key, w * WeightExpr(c));
  }
  return out;
}

// ---------------------------------------------------------- rendering

std::string render_monomial(NormalKey key) {
  std::string out;
  if (key.x != 0) {
    out += "x";
    if (key.x != 1) out += "^" + std::to_string(key.x);
  }
  if (key.y != 0) {
    if (!out.empty()) out += " ";
    out += "y";
    if (key.y != 1) out += "^" + std::to_string(key.y);
  }
  return out.empty() ? "1" : out;
}

std::string scalar_to_string(const Rational& v) { return v.str(); }

std::string scalar_to_string(const Complex& v) { return lucas_elliptica::to_string(v); }

std::string NormalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool constant = key.x == 0 && key.y == 0;
    bool negative = false;
    std::string coeff;
    if (c.size() == 1) {
      const auto& [m, r] = *c.terms().begin();
      negative = r < 0;
      const Rational mag = negative ? Rational(-r) : r;
      if (!m.is_one()) {
        coeff = (mag != 1 ? mag.str() + " " : std::string()) + m.to_string();
      } else if (mag != 1 || constant) {
        coeff = mag.str();
      }
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "- ";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (constant) {
      os << coeff;
    } else if (coeff.empty()) {
      os << render_monomial(key);
    } else {
      os << coeff << ' ' << render_monomial(key);
    }
  }
  return os.str();
}

NormalPoly parse_normal_poly(std::string_view text) {
  detail::Lexer lex(text);
  if (lex.at_end()) lex.fail("empty input");
  NormalPoly out;
  bool first = true;
  while (!lex.at_end()) {
    Rational sign(1);
    if (lex.accept('-')) {
      sign = -1;
    } else if (!lex.accept('+') && !first) {
      lex.fail("expected '+' or '-' between terms");
    }
    first = false;

    WeightExpr coeff(sign);
    NormalKey key{0, 0};
    int stage = 0;  // 0: coefficient factors, 1: after x, 2: after y
    bool any = false;
    for (;;) {
      const char c = lex.peek();
      if (lex.at_digit() || c == '(' || c == 'w') {
        if (stage > 0) lex.fail("coefficient after x or y");
        if (c == '(') {
          lex.accept('(');
          coeff = coeff * detail::parse_weight_sum(lex);
          lex.expect(')');
        } else if (c == 'w') {
          coeff = coeff * WeightExpr(detail::parse_weight_factors(lex, any));
        } else {
          coeff = coeff * WeightExpr(lex.rational());
        }
        any = true;
      } else if (c == 'x') {
        if (stage >= 1) lex.fail("x must precede y and appear once");
        lex.accept('x');
        key.x = lex.accept('^') ? static_cast<int>(lex.integer()) : 1;
        stage = 1;
        any = true;
      } else if (c == 'y') {
        if (stage >= 2) lex.fail("y may appear once per term");
        lex.accept('y');
        key.y = lex.accept('^') ? static_cast<int>(lex.integer()) : 1;
        if (key.y < 0) lex.fail("negative power of y");
        stage = 2;
        any = true;
      } else {
        break;
      }
    }
    if (!any) lex.fail("expected a term");
    out.add_term(key, coeff);
  }
  return out;
}

// ------------------------------------------------- binomial coefficients

namespace {

class BinomialTable {
 public:
  WeightExpr get(int n, int k) {
    if (n < 0) throw DomainError("weighted_binom: n must be nonnegative");
    if (k < 0 || k > n) return WeightExpr{};
    std::lock_guard<std::mutex> lock(mu_);
    if (rows_.empty()) rows_.push_back({WeightExpr(Rational(1))});
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size()) - 1;  // build row m+1
      const auto& prev = rows_.back();
      std::vector<WeightExpr> next(m + 2);
      for (int j = 0; j <= m + 1; ++j) {
        WeightExpr v = j <= m ? prev[j] : WeightExpr{};
        if (j >= 1) v += prev[j - 1] * big_weight_expr(j, m + 1 - j);
        next[j] = std::move(v);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<WeightExpr>> rows_;
};

BinomialTable& binomial_table() {
  static BinomialTable table;
  return table;
}

void walk_paths(int s, int t, int east_left, int north_left,
                const WeightMonomial& acc, WeightExpr& out) {
  if (east_left == 0 && north_left == 0) {
    out.add_term(acc, 1);
    return;
  }
  if (east_left > 0) {
    WeightMonomial step = acc;
    for (int j = 1; j <= t; ++j) step = step * WeightMonomial::symbol(s + 1, j);
    walk_paths(s + 1, t, east_left - 1, north_left, step, out);
  }
  if (north_left > 0) walk_paths(s, t + 1, east_left, north_left - 1, acc, out);
}

}  // namespace

WeightExpr weighted_binom(int n, int k) { return binomial_table().get(n, k); }

WeightExpr lattice_path_oracle(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("lattice_path_oracle: need 0 <= k <= n");
  }
  WeightExpr out;
  walk_paths(0, 0, k, n - k, WeightMonomial{}, out);
  return out;
}

bool binomial_theorem_check(int n) {
  if (n < 0) throw DomainError("binomial_theorem_check: n must be nonnegative");
  const WordPoly sum = WordPoly::x() + WordPoly::y();
  WordPoly power(Rational(1));
  for (int i = 0; i < n; ++i) power = power * sum;
  NormalPoly expected;
  for (int k = 0; k <= n; ++k) expected.add_term({k, n - k}, weighted_binom(n, k));
  return normal_order(power) == expected;
}

// ------------------------------------------------------------- Fibonacci

NormalPoly dual_image(const NormalPoly& u) {
  const NormalPoly dual_y = NormalPoly::monomial(-1, 1);  // x^-1 y
  NormalPoly out;
  for (const auto& [key, c] : u.terms()) {
    NormalPoly image = NormalPoly::monomial(-key.x, 0);
    for (int i = 0; i < key.y; ++i) image = image * dual_y;
    const WeightExpr dc = dual_weight_map(c);
    for (const auto& [k, w] : image.terms()) out.add_term(k, dc * w);
  }
  return out;
}

namespace {

class FibTable {
 public:
  NormalPoly get(int n) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    NormalPoly value = compute(n);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.try_emplace(n, std::move(value)).first->second;
  }

 private:
  NormalPoly compute(int n) {
    NormalPoly out;
    if (n >= 0) {
      for (int k = 0; 2 * k <= n; ++k) out.add_term({k, n - 2 * k}, weighted_binom(n - k, k));
      return out;
    }
    if (n == -1) return out;
    const int m = -n;
    out = dual_image(get(m - 2)) * NormalPoly::monomial(-1, 0);
    return m % 2 == 0 ? out : -out;
  }

  std::mutex mu_;
  std::map<int, NormalPoly> memo_;
};

FibTable& fib_table() {
  static FibTable table;
  return table;
}

}  // namespace

NormalPoly fib_weighted(int n) { return fib_table().get(n); }

bool check_weighted_sum_formula(int m, int n) {
  return fib_weighted(m + n) ==
         fib_weighted(m - 1) * NormalPoly::monomial(1, 0) * fib_weighted(n - 1) +
             fib_weighted(m) * fib_weighted(n);
}

bool check_weighted_euler_cassini(int n, int k) {
  NormalPoly lhs = fib_weighted(k);
  if (n % 2 != 0) lhs = -lhs;
  const NormalPoly rhs =
      dual_image(fib_weighted(n - 2)) * NormalPoly::monomial(-1, 0) * fib_weighted(n + k) -
      dual_image(fib_weighted(n - 1)) * fib_weighted(n + k - 1);
  return lhs == rhs;
}

}  // namespace lucas_elliptica
