#include "lucas_elliptica/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lucas_elliptica {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo * std::pow(hi / lo, uniform01(rng));
}

Complex random_phase(std::mt19937_64& rng, double modulus) {
  return std::polar(modulus, 2.0 * std::numbers::pi * uniform01(rng));
}

}  // namespace

EllipticParams sample_params(std::mt19937_64& rng, double p_max) {
  if (!(p_max > 0.0 && p_max < 1.0)) throw DomainError("sample_params: p_max must lie in (0,1)");
  EllipticParams ep;
  ep.q = random_phase(rng, log_uniform(rng, 0.8, 1.25));
  ep.a = random_phase(rng, log_uniform(rng, 0.3, 3.0));
  ep.b = random_phase(rng, log_uniform(rng, 0.3, 3.0));
  const double p_hi = std::min(0.5, p_max);
  const double p_lo = std::min(0.05, p_hi);
  ep.p = random_phase(rng, p_lo + (p_hi - p_lo) * uniform01(rng));
  return ep;
}

std::pair<Complex, Complex> sample_theta_point(std::mt19937_64& rng, double p_max) {
  if (!(p_max > 0.0 && p_max < 1.0)) {
    throw DomainError("sample_theta_point: p_max must lie in (0,1)");
  }
  const Complex z = random_phase(rng, log_uniform(rng, 0.3, 3.0));
  const Complex p = random_phase(rng, p_max * (1.0 - uniform01(rng)));
  return {z, p};
}

}  // namespace lucas_elliptica
