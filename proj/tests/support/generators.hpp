// Hand-rolled random generators for the property tests. Every generator
// draws from a caller-owned std::mt19937_64 so failures replay from a seed.

#pragma once

#include <random>
#include <vector>

#include "lucas_elliptica/sampling.hpp"
#include "lucas_elliptica/word_algebra.hpp"

namespace gen {

namespace le = lucas_elliptica;

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline le::Word word(std::mt19937_64& rng, int max_len) {
  const int len = uniform_int(rng, 0, max_len);
  std::vector<le::Letter> letters;
  for (int i = 0; i < len; ++i) {
    letters.push_back(static_cast<le::Letter>(uniform_int(rng, 0, 2)));
  }
  return le::Word::from_letters(letters);
}

/// Up to max_terms words with small nonzero rational coefficients.
inline le::WordPoly word_poly(std::mt19937_64& rng, int max_terms, int max_len) {
  le::WordPoly out;
  const int terms = uniform_int(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    int num = uniform_int(rng, -4, 4);
    if (num == 0) num = 1;
    out.add_term(word(rng, max_len), le::Rational(num, uniform_int(rng, 1, 3)));
  }
  return out;
}

inline le::EllipticParams params(std::mt19937_64& rng) { return le::sample_params(rng); }

}  // namespace gen
