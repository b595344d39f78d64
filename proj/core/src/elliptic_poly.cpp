#include "lucas_elliptica/elliptic_poly.hpp"

#include <utility>

namespace lucas_elliptica {

template <typename C>
BasicEllipticPoly<C> BasicEllipticPoly<C>::constant(C c) {
  BasicEllipticPoly out;
  out.add_term({0, 0}, [c](const Params&) { return c; });
  return out;
}

template <typename C>
BasicEllipticPoly<C> BasicEllipticPoly<C>::monomial(int xexp, int yexp) {
  BasicEllipticPoly out;
  out.add_term({xexp, yexp}, [](const Params&) { return C(1); });
  return out;
}

template <typename C>
void BasicEllipticPoly<C>::add_term(NormalKey key, Coefficient c) {
  if (key.y < 0) throw DomainError("EllipticPoly: negative power of y");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second = [f = std::move(it->second), g = std::move(c)](const Params& ep) {
      return C(f(ep) + g(ep));
    };
  }
}

template <typename C>
BasicEllipticPoly<C> BasicEllipticPoly<C>::operator-() const {
  BasicEllipticPoly out;
  for (const auto& [k, c] : terms_) {
    out.terms_.emplace(k, [c](const Params& ep) { return C(-c(ep)); });
  }
  return out;
}

template <typename C>
BasicEllipticPoly<C> BasicEllipticPoly<C>::scaled(Coefficient c) const {
  BasicEllipticPoly out;
  for (const auto& [k, f] : terms_) {
    out.terms_.emplace(k, [c, f](const Params& ep) { return C(c(ep) * f(ep)); });
  }
  return out;
}

template <typename C>
BasicEllipticPoly<C> BasicEllipticPoly<C>::times(const BasicEllipticPoly& b) const {
  BasicEllipticPoly out;
  for (const auto& [ka, fa] : terms_) {
    for (const auto& [kb, fb] : b.terms_) {
      out.add_term({ka.x + kb.x, ka.y + kb.y}, [fa, fb, ka, kb](const Params& ep) {
        const C moved = fb(weight_shift(ep, ka.x, ka.y));
        const C swap = ka.y == 0 || kb.x == 0
                           ? C(1)
                           : interchange_value(weight_shift(ep, ka.x, 0), kb.x, ka.y);
        return C(fa(ep) * moved * swap);
      });
    }
  }
  return out;
}

template <typename C>
NumericNormalPoly<C> BasicEllipticPoly<C>::evaluate(const Params& ep) const {
  NumericNormalPoly<C> out;
  for (const auto& [k, f] : terms_) out.emplace(k, f(ep));
  return out;
}

template class BasicEllipticPoly<Complex>;
template class BasicEllipticPoly<WideComplex>;

namespace {

template <typename C>
C interchange_impl(const BasicEllipticParams<C>& ep, int m, int l) {
  C v(1);
  if (m >= 0) {
    for (int i = 1; i <= m; ++i) v *= big_weight(ep, i, l);
  } else {
    for (int i = m + 1; i <= 0; ++i) v /= big_weight(ep, i, l);
  }
  return v;
}

}  // namespace

Complex interchange_value(const EllipticParams& ep, int m, int l) {
  return interchange_impl(ep, m, l);
}

WideComplex interchange_value(const WideParams& ep, int m, int l) {
  return interchange_impl(ep, m, l);
}

template <typename C>
BasicEllipticPoly<C> basic_fib_elliptic(int n) {
  using Params = BasicEllipticParams<C>;
  BasicEllipticPoly<C> out;
  if (n >= 0) {
    for (int k = 0; 2 * k <= n; ++k) {
      out.add_term({k, n - 2 * k},
                   [n, k](const Params& ep) { return elliptic_binom(n - k, k, ep); });
    }
    return out;
  }
  if (n == -1) return out;
  out = basic_dual_fib_elliptic<C>(-n - 2) * BasicEllipticPoly<C>::monomial(-1, 0);
  return n % 2 == 0 ? out : -out;
}

template <typename C>
BasicEllipticPoly<C> basic_dual_fib_elliptic(int n) {
  using Params = BasicEllipticParams<C>;
  const auto dual_y = BasicEllipticPoly<C>::monomial(-1, 1);
  const BasicEllipticPoly<C> f_n = basic_fib_elliptic<C>(n);
  BasicEllipticPoly<C> out;
  for (const auto& [key, f] : f_n.terms()) {
    auto image = BasicEllipticPoly<C>::monomial(-key.x, 0);
    for (int i = 0; i < key.y; ++i) image = image * dual_y;
    out = out + image.scaled([f](const Params& ep) { return f(ep.dual()); });
  }
  return out;
}

template EllipticPoly basic_fib_elliptic<Complex>(int);
template WideEllipticPoly basic_fib_elliptic<WideComplex>(int);
template EllipticPoly basic_dual_fib_elliptic<Complex>(int);
template WideEllipticPoly basic_dual_fib_elliptic<WideComplex>(int);

namespace {

template <typename C>
double euler_cassini_at(int n, int k, const BasicEllipticParams<C>& ep) {
  using Poly = BasicEllipticPoly<C>;
  Poly lhs = basic_fib_elliptic<C>(k);
  if (n % 2 != 0) lhs = -lhs;
  const Poly rhs = basic_dual_fib_elliptic<C>(n - 2) * Poly::monomial(-1, 0) *
                       basic_fib_elliptic<C>(n + k) -
                   basic_dual_fib_elliptic<C>(n - 1) * basic_fib_elliptic<C>(n + k - 1);
  return max_coefficient_residual(lhs.evaluate(ep), rhs.evaluate(ep));
}

}  // namespace

double check_elliptic_euler_cassini(int n, int k, const EllipticParams& ep) {
  ep.validate();
  return widening_residual(ep, [&](const auto& e) { return euler_cassini_at(n, k, e); });
}

}  // namespace lucas_elliptica
