// Verification suites over sampled parameters and their reports.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lucas_elliptica/types.hpp"

namespace lucas_elliptica {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class OutputFormat { kJson, kCsv, kText };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  int trials = 20;
  double eps_report = 1e-9;
  double p_max = 0.5;
  OutputFormat output_format = OutputFormat::kJson;
  /// Worker threads for trials; 0 picks the hardware concurrency.
  unsigned jobs = 0;

  /// Throws DomainError on trials < 1, eps_report <= 0 or p_max outside (0,1).
  void validate() const;
};

using ParamValue = std::variant<long long, Complex>;

struct CheckRecord {
  std::string suite;
  std::string id;
  std::vector<std::pair<std::string, ParamValue>> params;
  /// Set for numeric checks; exact checks carry only `pass`.
  std::optional<double> residual;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckRecord> checks;
  double max_residual = 0.0;
  bool pass = true;
};

enum class Suite {
  kTheta,
  kEllipticBinom,
  kLucas,
  kWordIdentities,
  kWeightedIdentities,
  kEllipticCassini,
  kAll,
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// Runs a suite; checks appear in a fixed order regardless of cfg.jobs.
VerificationReport run_suite(Suite suite, const RunConfig& cfg);

/// JSON: {suite, seed, trials, checks:[{id, params, residual|exact, pass}],
/// max_residual, pass}; CSV: suite,id,residual,pass; text: one line per check.
std::string render_report(const VerificationReport& report, OutputFormat format);

}  // namespace lucas_elliptica
