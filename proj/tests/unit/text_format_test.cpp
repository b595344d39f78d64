#include <gtest/gtest.h>

#include <random>
#include <string>

#include "lucas_elliptica/sampling.hpp"
#include "lucas_elliptica/types.hpp"

namespace le = lucas_elliptica;
using le::Complex;

TEST(TextFormat, ComplexRendering) {
  EXPECT_EQ(le::to_string(Complex(0.0)), "0");
  EXPECT_EQ(le::to_string(Complex(-0.0, 0.0)), "0");
  EXPECT_EQ(le::to_string(Complex(-1.0)), "-1");
  EXPECT_EQ(le::to_string(Complex(0.25, 1.5)), "0.25+1.5i");
  EXPECT_EQ(le::to_string(Complex(0.25, -1.5)), "0.25-1.5i");
  EXPECT_EQ(le::to_string(0.1), "0.1");
}

TEST(TextFormat, ComplexParsing) {
  EXPECT_EQ(le::parse_complex("1+0i"), Complex(1.0, 0.0));
  EXPECT_EQ(le::parse_complex("0.3"), Complex(0.3, 0.0));
  EXPECT_EQ(le::parse_complex("-0.7-0.2i"), Complex(-0.7, -0.2));
  EXPECT_EQ(le::parse_complex("+2.5i"), Complex(0.0, 2.5));
  EXPECT_EQ(le::parse_complex("1e-3+2E+1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(le::parse_complex(" 0.5-1i "), Complex(0.5, -1.0));
  for (const char* bad : {"", "i", "1+i", "abc", "1+2", "1+2j", "nan", "1++2i", "inf"}) {
    EXPECT_THROW(le::parse_complex(bad), le::ParseError) << bad;
  }
}

TEST(TextFormat, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Complex z(le::uniform01(rng) * 10 - 5, le::uniform01(rng) * 1e-3);
    EXPECT_EQ(le::parse_complex(le::to_string(z)), z);
  }
}

TEST(Sampling, DeterministicAndInRange) {
  std::mt19937_64 a(le::sub_seed(42, 3)), b(le::sub_seed(42, 3));
  for (int i = 0; i < 100; ++i) {
    const le::EllipticParams x = le::sample_params(a, 0.3), y = le::sample_params(b, 0.3);
    EXPECT_EQ(x.a, y.a);
    EXPECT_EQ(x.p, y.p);
    EXPECT_GE(std::abs(x.q), 0.8 - 1e-12);
    EXPECT_LE(std::abs(x.q), 1.25 + 1e-12);
    EXPECT_GE(std::abs(x.a), 0.3 - 1e-12);
    EXPECT_LE(std::abs(x.b), 3.0 + 1e-12);
    EXPECT_LE(std::abs(x.p), 0.3 + 1e-12);
  }
  EXPECT_NE(le::sub_seed(42, 0), le::sub_seed(42, 1));
  EXPECT_NE(le::sub_seed(42, 0), le::sub_seed(43, 0));
  EXPECT_THROW(le::sample_params(a, 1.0), le::DomainError);
}

TEST(Sampling, ResamplesOnSingularValue) {
  int calls = 0;
  const int result = le::with_generic_params(1, 0, 0.5, [&](const le::EllipticParams&) {
    if (++calls < 3) throw le::SingularValue("pole");
    return calls;
  });
  EXPECT_EQ(result, 3);
  calls = 0;
  EXPECT_THROW(le::with_generic_params(1, 0, 0.5,
                                       [&](const le::EllipticParams&) -> int {
                                         ++calls;
                                         throw le::SingularValue("pole");
                                       }),
               le::SingularValue);
  EXPECT_EQ(calls, le::kMaxResamples);
}
