// Free non-commutative algebra over x, x^-1, y with exact rational
// coefficients, and the non-commutative Fibonacci polynomials living in it.
//
// F_0 = 1, F_1 = y, F_{n+2} = F_n x + F_{n+1} y for every integer n (run
// backwards for negative indices, which produces polynomials in x^-1).

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

enum class Letter : std::uint8_t { XInv = 0, X = 1, Y = 2 };

/// Reduced word, stored as runs. An x-run carries a signed exponent (x^-2 is
/// one run), a y-run a positive one, and consecutive runs alternate between
/// x and y. Reduction of x x^-1 pairs therefore happens when runs merge.
class Word {
 public:
  struct Run {
    bool is_x;
    int exponent;
    bool operator==(const Run&) const = default;
  };

  Word() = default;
  static Word x_power(int k);
  static Word y_power(int m);
  /// Reduces adjacent x x^-1 / x^-1 x pairs.
  static Word from_letters(std::span<const Letter> letters);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  std::size_t length() const;
  std::vector<Letter> letters() const;

  /// Appends a run, merging with (and possibly cancelling) the last run.
  void push(Run run);

  friend Word operator*(const Word& lhs, const Word& rhs);
  bool operator==(const Word&) const = default;

  /// Lexicographic on the letter sequence with x^-1 < x < y; a proper
  /// prefix sorts first.
  std::strong_ordering operator<=>(const Word& other) const;

  /// e.g. "x^-1yx^-2y^2"; the empty word renders as "1".
  std::string to_string() const;

 private:
  std::vector<Run> runs_;
};

/// Finite linear combination of reduced words; zero coefficients are never
/// stored.
class WordPoly {
 public:
  using Terms = std::map<Word, Rational>;

  WordPoly() = default;
  WordPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit WordPoly(Word w, const Rational& c = 1);
  static WordPoly x() { return WordPoly(Word::x_power(1)); }
  static WordPoly x_inv() { return WordPoly(Word::x_power(-1)); }
  static WordPoly y() { return WordPoly(Word::y_power(1)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Rational& c);

  WordPoly& operator+=(const WordPoly& other);
  WordPoly& operator-=(const WordPoly& other);
  WordPoly& operator*=(const Rational& c);
  WordPoly operator-() const;
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b);
  friend WordPoly operator*(WordPoly a, const Rational& c) { return a *= c; }
  bool operator==(const WordPoly&) const = default;

  /// Terms joined by " + " / " - ", e.g. "x^2 + xy^2 + yxy + y^2x + y^4".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Inverse of WordPoly::to_string. Throws ParseError.
WordPoly parse_word_poly(std::string_view text);

WordPoly mul(const WordPoly& u, const WordPoly& v);

enum class FibRecurrence {
  kRight,  // F_{n+2} = F_n x + F_{n+1} y
  kLeft,   // F_{n+2} = x F_n + y F_{n+1}
};

/// F_n(x, y) for any integer n.
WordPoly fib_word(int n, FibRecurrence rec = FibRecurrence::kRight);

/// All F_n for lo <= n <= hi, computed in one sweep.
std::map<int, WordPoly> fib_word_range(int lo, int hi);

/// Algebra endomorphism x -> x^-1, x^-1 -> x, y -> x^-1 y.
WordPoly dual_substitution(const WordPoly& u);

struct Matrix2 {
  WordPoly a11, a12, a21, a22;

  static Matrix2 identity();
  /// C(x,y) = [[0, 1], [x, y]].
  static Matrix2 fibonacci();
  /// C^{-1}(x,y) = [[-x^-1 y, x^-1], [1, 0]].
  static Matrix2 fibonacci_inverse();

  friend Matrix2 operator*(const Matrix2& l, const Matrix2& r);
  bool operator==(const Matrix2&) const = default;
};

/// C^n by repeated multiplication with C or C^{-1}.
Matrix2 C_power(int n);

/// a11(x^-1, x, x^-1 y) a22 - a21(x^-1, x, x^-1 y) x a12.
WordPoly nc_det(const Matrix2& m);

/// F_{m+n} == F_{m-1} x F_{n-1} + F_m F_n.
bool check_sum_formula(int m, int n);

/// (-1)^n F_k == F_{n-2}(x^-1, x^-1 y) x^-1 F_{n+k} - F_{n-1}(x^-1, x^-1 y) F_{n+k-1}.
bool check_euler_cassini(int n, int k);

/// Sum over tilings of a 1 x n board by dominoes (x) and squares (y) of the
/// left-to-right product word.
WordPoly tilings_oracle(int n);

}  // namespace lucas_elliptica
