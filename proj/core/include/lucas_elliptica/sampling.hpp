// Deterministic sampling of generic elliptic parameters.

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "lucas_elliptica/elliptic_core.hpp"

namespace lucas_elliptica {

inline constexpr int kMaxResamples = 100;

/// Independent 64-bit seed for (seed, stream) via splitmix64 finalization.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits; identical on every
/// platform, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng);

/// |q| in [0.8, 1.25], |a|, |b| in [0.3, 3], |p| in [0.05, min(0.5, p_max)],
/// independent uniform phases. Log-uniform moduli.
EllipticParams sample_params(std::mt19937_64& rng, double p_max = 0.5);

/// A point z with |z| in [0.3, 3] and p with |p| in (0, p_max], both with
/// random phase.
std::pair<Complex, Complex> sample_theta_point(std::mt19937_64& rng, double p_max = 0.5);

/// Calls fn(ep) on parameters drawn for (seed, trial); whenever fn throws
/// SingularValue the parameters are redrawn. Gives up after kMaxResamples
/// attempts by rethrowing.
template <typename Fn>
auto with_generic_params(std::uint64_t seed, std::uint64_t trial, double p_max, Fn&& fn) {
  std::mt19937_64 rng(sub_seed(seed, trial));
  for (int attempt = 1;; ++attempt) {
    const EllipticParams ep = sample_params(rng, p_max);
    try {
      return fn(ep);
    } catch (const SingularValue&) {
      if (attempt >= kMaxResamples) throw;
    }
  }
}

}  // namespace lucas_elliptica
