#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "lucas_elliptica/word_algebra.hpp"

namespace le = lucas_elliptica;
using le::Rational;
using le::WordPoly;

TEST(Word, ReductionAndRendering) {
  const std::vector<le::Letter> letters{le::Letter::X, le::Letter::XInv, le::Letter::Y,
                                        le::Letter::X, le::Letter::X};
  const le::Word w = le::Word::from_letters(letters);
  EXPECT_EQ(w.to_string(), "yx^2");
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(le::Word::x_power(2) * le::Word::x_power(-2), le::Word{});
  EXPECT_EQ(le::Word{}.to_string(), "1");
  EXPECT_EQ(le::Word::x_power(-1).to_string(), "x^-1");
  EXPECT_THROW(le::Word::y_power(-1), le::DomainError);
}

TEST(Word, LexicographicOrder) {
  // x^-1 < x < y letterwise, and a proper prefix sorts first.
  const auto xi = le::Word::x_power(-1), x = le::Word::x_power(1), y = le::Word::y_power(1);
  EXPECT_LT(xi, x);
  EXPECT_LT(x, y);
  EXPECT_LT(x, x * y);
  EXPECT_LT(x * x, x * y);
  EXPECT_LT(x * y * y, y * x);
}

TEST(WordPoly, Arithmetic) {
  const WordPoly x = WordPoly::x(), y = WordPoly::y(), xi = WordPoly::x_inv();
  EXPECT_EQ(x * xi, WordPoly(Rational(1)));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x + y) * (x + y), x * x + x * y + y * x + y * y);
  EXPECT_NE(x * y, y * x);
  EXPECT_EQ(le::mul(x, y), x * y);
  EXPECT_EQ((x * Rational(3, 2)).to_string(), "3/2 x");
  EXPECT_EQ(WordPoly().to_string(), "0");
  EXPECT_EQ((-x - y).to_string(), "- x - y");
  EXPECT_EQ(WordPoly(Rational(-2)).to_string(), "- 2");
}

TEST(WordPoly, ParseRoundTrip) {
  for (const std::string s : {"x^2 + xy^2 + yxy + y^2x + y^4", "- x^-1yx^-1", "- 2 + 3/2 x",
                              "x^-2yx^-1 - 1/3 y", "1"}) {
    EXPECT_EQ(le::parse_word_poly(s).to_string(), s);
  }
  EXPECT_EQ(le::parse_word_poly("xx^-1"), WordPoly(Rational(1)));
  EXPECT_EQ(le::parse_word_poly("y + x"), le::parse_word_poly("x + y"));
  EXPECT_THROW(le::parse_word_poly(""), le::ParseError);
  EXPECT_THROW(le::parse_word_poly("x +"), le::ParseError);
  EXPECT_THROW(le::parse_word_poly("x y^-1"), le::ParseError);
  EXPECT_THROW(le::parse_word_poly("x z"), le::ParseError);
  EXPECT_THROW(le::parse_word_poly("1/0 x"), le::ParseError);
}

TEST(FibWord, GoldenValues) {
  const std::vector<std::pair<int, std::string>> golden{
      {0, "1"},
      {1, "y"},
      {2, "x + y^2"},
      {3, "xy + yx + y^3"},
      {4, "x^2 + xy^2 + yxy + y^2x + y^4"},
      {-1, "0"},
      {-2, "x^-1"},
      {-3, "- x^-1yx^-1"},
      {-4, "x^-2 + x^-1yx^-1yx^-1"},
      {-5, "- x^-2yx^-1 - x^-1yx^-2 - x^-1yx^-1yx^-1yx^-1"},
      {-6, "x^-3 + x^-2yx^-1yx^-1 + x^-1yx^-2yx^-1 + x^-1yx^-1yx^-2 + "
           "x^-1yx^-1yx^-1yx^-1yx^-1"},
  };
  for (const auto& [n, s] : golden) {
    EXPECT_EQ(le::fib_word(n).to_string(), s) << n;
    EXPECT_EQ(le::fib_word(n), le::parse_word_poly(s)) << n;
  }
}

TEST(FibWord, LeftAndRightRecurrencesAgree) {
  for (int n = -8; n <= 10; ++n) {
    EXPECT_EQ(le::fib_word(n, le::FibRecurrence::kLeft), le::fib_word(n)) << n;
  }
  const auto range = le::fib_word_range(-6, 8);
  for (int n = -6; n <= 8; ++n) EXPECT_EQ(range.at(n), le::fib_word(n));
}

TEST(FibWord, Tilings) {
  EXPECT_EQ(le::tilings_oracle(0), WordPoly(Rational(1)));
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(le::tilings_oracle(n), le::fib_word(n)) << n;
  EXPECT_EQ(le::fib_word(12).size(), 233u);
  EXPECT_THROW(le::tilings_oracle(-1), le::DomainError);
}

TEST(FibWord, NegativeReflection) {
  // F_{-n} = (-1)^n F_{n-2}(x^-1, x^-1 y) x^-1.
  for (int n = 2; n <= 9; ++n) {
    WordPoly rhs = le::dual_substitution(le::fib_word(n - 2)) * WordPoly::x_inv();
    if (n % 2 != 0) rhs = -rhs;
    EXPECT_EQ(le::fib_word(-n), rhs) << n;
  }
}

TEST(DualSubstitution, Involutive) {
  const WordPoly u = le::parse_word_poly("x^2yx^-1 + 2 y^2 - x^-3");
  EXPECT_EQ(le::dual_substitution(le::dual_substitution(u)), u);
  EXPECT_EQ(le::dual_substitution(WordPoly::y()), WordPoly::x_inv() * WordPoly::y());
}

TEST(Matrix, PowersOfC) {
  const auto f = le::fib_word_range(-8, 10);
  for (int n = -6; n <= 10; ++n) {
    const le::Matrix2 m = le::C_power(n);
    EXPECT_EQ(m.a11, f.at(n - 2) * WordPoly::x()) << n;
    EXPECT_EQ(m.a12, f.at(n - 1)) << n;
    EXPECT_EQ(m.a21, f.at(n - 1) * WordPoly::x()) << n;
    EXPECT_EQ(m.a22, f.at(n)) << n;
    EXPECT_EQ(le::nc_det(m), WordPoly(Rational(n % 2 == 0 ? 1 : -1))) << n;
  }
  EXPECT_EQ(le::Matrix2::fibonacci() * le::Matrix2::fibonacci_inverse(), le::Matrix2::identity());
  EXPECT_EQ(le::Matrix2::fibonacci_inverse() * le::Matrix2::fibonacci(), le::Matrix2::identity());
}

TEST(Matrix, DeterminantNotMultiplicativeInGeneral) {
  const WordPoly x = WordPoly::x(), y = WordPoly::y();
  const WordPoly one(Rational(1));
  const le::Matrix2 a{one, y, WordPoly(), one};
  const le::Matrix2 b{one, WordPoly(), y, one};
  EXPECT_NE(le::nc_det(a * b), le::nc_det(a) * le::nc_det(b));
}

TEST(Identities, SumAndEulerCassini) {
  for (int m = -5; m <= 5; ++m) {
    for (int n = -5; n <= 5; ++n) EXPECT_TRUE(le::check_sum_formula(m, n)) << m << "," << n;
  }
  for (int n = -4; n <= 6; ++n) {
    for (int k = -3; k <= 3; ++k) EXPECT_TRUE(le::check_euler_cassini(n, k)) << n << "," << k;
  }
}
