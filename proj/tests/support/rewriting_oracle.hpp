// Normal ordering by literal one-step rewriting, used as an oracle for the
// closed-form interchange rule in NormalPoly multiplication.
//
// A term is a string of tokens: weight symbols w(s,t)^e and the letters x,
// x^-1, y. The rules are
//
//   x x^-1 -> 1          x^-1 x -> 1
//   y x    -> w(1,1) x y
//   y x^-1 -> w(0,1)^-1 x^-1 y
//   x w(s,t)^e   -> w(s+1,t)^e x
//   x^-1 w(s,t)^e -> w(s-1,t)^e x^-1
//   y w(s,t)^e   -> w(s,t+1)^e y
//
// and a term is normal once it reads (weights)(x-letters)(y-letters).

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "lucas_elliptica/weighted_algebra.hpp"

namespace oracle {

namespace le = lucas_elliptica;

struct Token {
  enum Kind { kWeight, kX, kXInv, kY } kind;
  int s = 0, t = 0, e = 0;  // kWeight only
};

using Term = std::vector<Token>;

inline Term from_word(const le::Word& w) {
  Term out;
  for (le::Letter l : w.letters()) {
    switch (l) {
      case le::Letter::X: out.push_back({Token::kX}); break;
      case le::Letter::XInv: out.push_back({Token::kXInv}); break;
      case le::Letter::Y: out.push_back({Token::kY}); break;
    }
  }
  return out;
}

inline bool is_letter(const Token& t) { return t.kind != Token::kWeight; }

/// Positions i at which the pair (term[i], term[i+1]) matches a rule.
inline std::vector<std::size_t> redexes(const Term& term) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < term.size(); ++i) {
    const Token& a = term[i];
    const Token& b = term[i + 1];
    if (!is_letter(a)) continue;
    const bool cancel = (a.kind == Token::kX && b.kind == Token::kXInv) ||
                        (a.kind == Token::kXInv && b.kind == Token::kX);
    const bool swap = a.kind == Token::kY && (b.kind == Token::kX || b.kind == Token::kXInv);
    if (cancel || swap || b.kind == Token::kWeight) out.push_back(i);
  }
  return out;
}

inline void rewrite_at(Term& term, std::size_t i) {
  const Token a = term[i];
  const Token b = term[i + 1];
  auto it = term.begin() + static_cast<std::ptrdiff_t>(i);
  if (b.kind == Token::kWeight) {
    Token moved = b;
    if (a.kind == Token::kX) moved.s += 1;
    if (a.kind == Token::kXInv) moved.s -= 1;
    if (a.kind == Token::kY) moved.t += 1;
    *it = moved;
    *(it + 1) = a;
  } else if (a.kind == Token::kY) {
    const Token w = b.kind == Token::kX ? Token{Token::kWeight, 1, 1, 1}
                                        : Token{Token::kWeight, 0, 1, -1};
    *it = b;
    *(it + 1) = a;
    term.insert(it, w);
  } else {
    term.erase(it, it + 2);
  }
}

/// Rewrites until normal. pick selects among the current redexes; leftmost
/// when absent.
template <typename Pick>
le::NormalPoly normalize(Term term, Pick&& pick) {
  for (auto r = redexes(term); !r.empty(); r = redexes(term)) rewrite_at(term, pick(r));
  le::WeightMonomial weight;
  le::NormalKey key{0, 0};
  for (const Token& t : term) {
    switch (t.kind) {
      case Token::kWeight: weight = weight * le::WeightMonomial::symbol(t.s, t.t, t.e); break;
      case Token::kX: ++key.x; break;
      case Token::kXInv: --key.x; break;
      case Token::kY: ++key.y; break;
    }
  }
  return le::NormalPoly(key, le::WeightExpr(weight));
}

inline le::NormalPoly normalize(const Term& term) {
  return normalize(term, [](const std::vector<std::size_t>& r) { return r.front(); });
}

inline le::NormalPoly normalize(const le::WordPoly& u) {
  le::NormalPoly out;
  for (const auto& [w, c] : u.terms()) {
    const le::NormalPoly n = normalize(from_word(w));
    for (const auto& [k, v] : n.terms()) {
      out.add_term(k, v * le::WeightExpr(c));
    }
  }
  return out;
}

}  // namespace oracle
