// Character cursor shared by the polynomial parsers.

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica::detail {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  /// Optionally signed decimal integer.
  long long integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::string digits = digit_run();
    long long value = 0;
    try {
      value = std::stoll(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
    return negative ? -value : value;
  }

  /// Unsigned rational "123" or "123/45".
  Rational rational() {
    skip_ws();
    Integer num(digit_run());
    Integer den(1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = Integer(digit_run());
      if (den == 0) fail("zero denominator");
    }
    return Rational(num, den);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\": " + what);
  }

 private:
  std::string digit_run() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace lucas_elliptica::detail
