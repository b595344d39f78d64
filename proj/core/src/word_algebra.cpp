#include "lucas_elliptica/word_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "lexer.hpp"

namespace lucas_elliptica {

// ---------------------------------------------------------------- Word

Word Word::x_power(int k) {
  Word w;
  w.push({true, k});
  return w;
}

Word Word::y_power(int m) {
  if (m < 0) {
    throw DomainError("Word::y_power: y is not invertible");
  }
  Word w;
  w.push({false, m});
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (Letter l : letters) {
    switch (l) {
      case Letter::X: w.push({true, 1}); break;
      case Letter::XInv: w.push({true, -1}); break;
      case Letter::Y: w.push({false, 1}); break;
    }
  }
  return w;
}

void Word::push(Run run) {
  if (run.exponent == 0) return;
  if (!run.is_x && run.exponent < 0) {
    throw DomainError("Word: negative power of y");
  }
  if (!runs_.empty() && runs_.back().is_x == run.is_x) {
    runs_.back().exponent += run.exponent;
    if (runs_.back().exponent == 0) runs_.pop_back();
    return;
  }
  runs_.push_back(run);
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Run& r : runs_) n += static_cast<std::size_t>(std::abs(r.exponent));
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const Run& r : runs_) {
    const Letter l = !r.is_x ? Letter::Y : (r.exponent > 0 ? Letter::X : Letter::XInv);
    out.insert(out.end(), static_cast<std::size_t>(std::abs(r.exponent)), l);
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  for (const Word::Run& r : rhs.runs_) out.push(r);
  return out;
}

namespace {

Letter run_letter(const Word::Run& r) {
  if (!r.is_x) return Letter::Y;
  return r.exponent > 0 ? Letter::X : Letter::XInv;
}

}  // namespace

std::strong_ordering Word::operator<=>(const Word& other) const {
  std::size_t i = 0, j = 0;
  int left_a = runs_.empty() ? 0 : std::abs(runs_[0].exponent);
  int left_b = other.runs_.empty() ? 0 : std::abs(other.runs_[0].exponent);
  while (i < runs_.size() && j < other.runs_.size()) {
    const Letter la = run_letter(runs_[i]);
    const Letter lb = run_letter(other.runs_[j]);
    if (la != lb) return la <=> lb;
    const int step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++i < runs_.size()) left_a = std::abs(runs_[i].exponent);
    if (left_b == 0 && ++j < other.runs_.size()) {
      left_b = std::abs(other.runs_[j].exponent);
    }
  }
  const bool a_done = i >= runs_.size();
  const bool b_done = j >= other.runs_.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Word::to_string() const {
  if (runs_.empty()) return "1";
  std::string out;
  for (const Run& r : runs_) {
    out += r.is_x ? 'x' : 'y';
    if (r.exponent != 1) out += '^' + std::to_string(r.exponent);
  }
  return out;
}

// ---------------------------------------------------------------- WordPoly

WordPoly::WordPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Word{}, c);
}

WordPoly::WordPoly(Word w, const Rational& c) {
  if (c != 0) terms_.emplace(std::move(w), c);
}

void WordPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordPoly& WordPoly::operator+=(const WordPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

WordPoly& WordPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

WordPoly WordPoly::operator-() const {
  WordPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

WordPoly operator*(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      out.add_term(wa * wb, ca * cb);
    }
  }
  return out;
}

WordPoly mul(const WordPoly& u, const WordPoly& v) { return u * v; }

std::string WordPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "- ";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    if (w.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << ' ';
      os << w.to_string();
    }
  }
  return os.str();
}

WordPoly parse_word_poly(std::string_view text) {
  detail::Lexer lex(text);
  if (lex.at_end()) lex.fail("empty input");
  WordPoly out;
  bool first = true;
  while (!lex.at_end()) {
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
    Word w;
    for (char c = lex.peek(); c == 'x' || c == 'y'; c = lex.peek()) {
      lex.accept(c);
      long long e = 1;
      if (lex.accept('^')) e = lex.integer();
      if (c == 'y' && e < 0) lex.fail("negative power of y");
      w.push({c == 'x', static_cast<int>(e)});
      any = true;
    }
    if (!any) lex.fail("expected a term");
    out.add_term(w, sign * coeff);
  }
  return out;
}

// ---------------------------------------------------------- Fibonacci

std::map<int, WordPoly> fib_word_range(int lo, int hi) {
  std::map<int, WordPoly> f;
  const WordPoly x = WordPoly::x(), xi = WordPoly::x_inv(), y = WordPoly::y();
  f[0] = WordPoly(Rational(1));
  f[1] = y;
  for (int n = 2; n <= hi; ++n) f[n] = f[n - 2] * x + f[n - 1] * y;
  for (int n = -1; n >= lo; --n) f[n] = (f[n + 2] - f[n + 1] * y) * xi;
  std::map<int, WordPoly> out;
  for (int n = lo; n <= hi; ++n) out.emplace(n, f.at(n));
  return out;
}

WordPoly fib_word(int n, FibRecurrence rec) {
  const WordPoly x = WordPoly::x(), xi = WordPoly::x_inv(), y = WordPoly::y();
  WordPoly f0(Rational(1)), f1 = y;  // F_j, F_{j+1}
  if (n == 0) return f0;
  if (n == 1) return f1;
  if (n > 1) {
    for (int j = 2; j <= n; ++j) {
      WordPoly next = rec == FibRecurrence::kRight ? f0 * x + f1 * y
                                                   : x * f0 + y * f1;
      f0 = std::move(f1);
      f1 = std::move(next);
    }
    return f1;
  }
  // Walk down: from F_{j+1}, F_{j+2} recover F_j.
  WordPoly hi = f1, lo = f0;  // F_{j+2}, F_{j+1} with j = -1
  for (int j = -1; j >= n; --j) {
    WordPoly fj = rec == FibRecurrence::kRight ? (hi - lo * y) * xi
                                               : xi * (hi - y * lo);
    hi = std::move(lo);
    lo = std::move(fj);
  }
  return lo;
}

WordPoly dual_substitution(const WordPoly& u) {
  WordPoly out;
  for (const auto& [w, c] : u.terms()) {
    Word image;
    for (const Word::Run& r : w.runs()) {
      if (r.is_x) {
        image.push({true, -r.exponent});
      } else {
        for (int i = 0; i < r.exponent; ++i) {
          image.push({true, -1});
          image.push({false, 1});
        }
      }
    }
    out.add_term(image, c);
  }
  return out;
}

// ---------------------------------------------------------- matrices

Matrix2 Matrix2::identity() {
  return {WordPoly(Rational(1)), WordPoly(), WordPoly(), WordPoly(Rational(1))};
}

Matrix2 Matrix2::fibonacci() {
  return {WordPoly(), WordPoly(Rational(1)), WordPoly::x(), WordPoly::y()};
}

Matrix2 Matrix2::fibonacci_inverse() {
  return {-(WordPoly::x_inv() * WordPoly::y()), WordPoly::x_inv(),
          WordPoly(Rational(1)), WordPoly()};
}

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
  return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
          l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

Matrix2 C_power(int n) {
  const Matrix2 step = n >= 0 ? Matrix2::fibonacci() : Matrix2::fibonacci_inverse();
  Matrix2 out = Matrix2::identity();
  for (int i = 0; i < std::abs(n); ++i) out = out * step;
  return out;
}

WordPoly nc_det(const Matrix2& m) {
  return dual_substitution(m.a11) * m.a22 -
         dual_substitution(m.a21) * WordPoly::x() * m.a12;
}

// ---------------------------------------------------------- identities

bool check_sum_formula(int m, int n) {
  const auto f = fib_word_range(std::min({m + n, m - 1, n - 1}),
                                std::max({m + n, m, n}));
  return f.at(m + n) == f.at(m - 1) * WordPoly::x() * f.at(n - 1) + f.at(m) * f.at(n);
}

bool check_euler_cassini(int n, int k) {
  const auto f = fib_word_range(std::min({k, n - 2, n + k - 1}),
                                std::max({k, n - 1, n + k}));
  WordPoly lhs = f.at(k);
  if (n % 2 != 0) lhs = -lhs;
  const WordPoly rhs =
      dual_substitution(f.at(n - 2)) * WordPoly::x_inv() * f.at(n + k) -
      dual_substitution(f.at(n - 1)) * f.at(n + k - 1);
  return lhs == rhs;
}

namespace {

void tile(int remaining, Word& prefix, WordPoly& out) {
  if (remaining == 0) {
    out.add_term(prefix, 1);
    return;
  }
  for (const auto& [size, run] : {std::pair{1, Word::Run{false, 1}},
                                  std::pair{2, Word::Run{true, 1}}}) {
    if (size > remaining) continue;
    Word next = prefix;
    next.push(run);
    tile(remaining - size, next, out);
  }
}

}  // namespace

WordPoly tilings_oracle(int n) {
  if (n < 0) {
    throw DomainError("tilings_oracle: board length must be nonnegative");
  }
  WordPoly out;
  Word empty;
  tile(n, empty, out);
  return out;
}

}  // namespace lucas_elliptica
