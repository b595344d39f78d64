#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

std::string to_string(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string to_string(const Complex& z) {
  if (z.imag() == 0.0) return to_string(z.real());
  std::string out = to_string(z.real());
  if (!(z.imag() < 0.0)) out += '+';
  return out + to_string(z.imag()) + "i";
}

namespace {

[[noreturn]] void bad_complex(std::string_view text) {
  throw ParseError("cannot parse complex number \"" + std::string(text) + "\"");
}

double parse_real(std::string_view part, std::string_view whole) {
  if (!part.empty() && part.front() == '+') part.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
  if (ec != std::errc{} || ptr != part.data() + part.size() || !std::isfinite(v)) {
    bad_complex(whole);
  }
  return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) bad_complex(text);
  if (s.back() != 'i') return {parse_real(s, text), 0.0};
  s.remove_suffix(1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (s.empty() || s == "+" || s == "-") bad_complex(text);
    return {0.0, parse_real(s, text)};
  }
  std::string_view im = s.substr(split);
  if (im == "+" || im == "-") bad_complex(text);
  return {parse_real(s.substr(0, split), text), parse_real(im, text)};
}

}  // namespace lucas_elliptica
