#include "lucas_elliptica/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lucas_elliptica/elliptic_core.hpp"
#include "lucas_elliptica/elliptic_poly.hpp"
#include "lucas_elliptica/lucas_dynamical.hpp"
#include "lucas_elliptica/sampling.hpp"
#include "lucas_elliptica/scalar_theta.hpp"
#include "lucas_elliptica/weighted_algebra.hpp"
#include "lucas_elliptica/word_algebra.hpp"

namespace lucas_elliptica {

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (!(eps_report > 0.0)) throw DomainError("eps must be positive");
  if (!(p_max > 0.0 && p_max < 1.0)) throw DomainError("p-max must lie in (0,1)");
}

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::kTheta, "theta"},
    {Suite::kEllipticBinom, "elliptic-binom"},
    {Suite::kLucas, "lucas"},
    {Suite::kWordIdentities, "word-identities"},
    {Suite::kWeightedIdentities, "weighted-identities"},
    {Suite::kEllipticCassini, "elliptic-cassini"},
    {Suite::kAll, "all"},
};

using Params = std::vector<std::pair<std::string, ParamValue>>;

Params elliptic_params(const EllipticParams& ep) {
  return {{"a", ep.a}, {"b", ep.b}, {"q", ep.q}, {"p", ep.p}};
}

CheckRecord numeric(std::string suite, std::string id, Params params, double residual,
                    const RunConfig& cfg) {
  return {std::move(suite), std::move(id), std::move(params), residual,
          residual <= cfg.eps_report};
}

/// A weight sum evaluated term by term against elliptic_binom(n, k), widened
/// as in widening_residual. Evaluators are kept across calls for their
/// symbol caches.
class ExpansionCheck {
 public:
  explicit ExpansionCheck(const EllipticParams& ep) : ep_(ep), narrow_(elliptic_env(ep)) {}

  double operator()(const WeightExpr& e, int n, int k) {
    const double r = relative_residual(narrow_(e), elliptic_binom(n, k, ep_));
    if (r <= kWideningThreshold) return r;
    if (!wide_) {
      wide_ep_ = widen(ep_);
      wide_.emplace(elliptic_env(wide_ep_));
    }
    return relative_residual((*wide_)(e), elliptic_binom(n, k, wide_ep_));
  }

 private:
  EllipticParams ep_;
  WeightEvaluator<Complex> narrow_;
  WideParams wide_ep_;
  std::optional<WeightEvaluator<WideComplex>> wide_;
};

CheckRecord exact(std::string suite, std::string id, Params params, bool ok) {
  return {std::move(suite), std::move(id), std::move(params), std::nullopt, ok};
}

/// Runs fn(trial) for every trial on cfg.jobs workers and concatenates the
/// results in trial order.
std::vector<CheckRecord> per_trial(const RunConfig& cfg,
                                   const std::function<std::vector<CheckRecord>(int)>& fn) {
  const auto n = static_cast<std::size_t>(cfg.trials);
  std::vector<std::vector<CheckRecord>> slots(n);
  unsigned jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(n));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(static_cast<int>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CheckRecord> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

// ------------------------------------------------------------------ suites

std::vector<CheckRecord> theta_suite(const RunConfig& cfg) {
  const std::string suite = "theta";
  return per_trial(cfg, [&](int trial) {
    std::mt19937_64 rng(sub_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    const auto [z, p] = sample_theta_point(rng, cfg.p_max);
    const Complex u = sample_theta_point(rng, cfg.p_max).first;
    const Complex v = sample_theta_point(rng, cfg.p_max).first;
    const Complex w = sample_theta_point(rng, cfg.p_max).first;
    const ThetaResiduals r = identity_residuals(z, u, v, w, p);
    return std::vector<CheckRecord>{
        numeric(suite, "theta/inversion", {{"z", z}, {"p", p}}, r.inversion, cfg),
        numeric(suite, "theta/quasi-periodicity", {{"z", z}, {"p", p}}, r.quasi_periodicity,
                cfg),
        numeric(suite, "theta/addition",
                {{"u", u}, {"v", v}, {"w", w}, {"z", z}, {"p", p}}, r.addition, cfg),
    };
  });
}

std::vector<CheckRecord> elliptic_binom_suite(const RunConfig& cfg) {
  const std::string suite = "elliptic-binom";
  constexpr int kMaxN = 8;
  return per_trial(cfg, [&](int trial) {
    return with_generic_params(cfg.seed, static_cast<std::uint64_t>(trial), cfg.p_max,
                               [&](const EllipticParams& ep) {
      double pascal = 0.0, second = 0.0, expansion = 0.0;
      ExpansionCheck expansion_at(ep);
      for (int n = 0; n <= kMaxN; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
          pascal = std::max(pascal, pascal_recurrence_residual(n, k, ep));
          second = std::max(second, second_recurrence_residual(n, k, ep));
        }
        for (int k = 0; k <= n; ++k) {
          expansion = std::max(expansion, expansion_at(weighted_binom(n, k), n, k));
        }
      }
      const Params params = elliptic_params(ep);
      return std::vector<CheckRecord>{
          numeric(suite, "elliptic-binom/pascal", params, pascal, cfg),
          numeric(suite, "elliptic-binom/second-recurrence", params, second, cfg),
          numeric(suite, "elliptic-binom/binomial-theorem", params, expansion, cfg),
      };
    });
  });
}

std::vector<CheckRecord> lucas_suite(const RunConfig& cfg) {
  const std::string suite = "lucas";
  constexpr int kMaxN = 12, kMaxLevel = 8;
  std::vector<CheckRecord> out = per_trial(cfg, [&](int trial) {
    return with_generic_params(cfg.seed, static_cast<std::uint64_t>(trial), cfg.p_max,
                               [&](const EllipticParams& ep) {
      const double recurrence = verify_elliptic_solution(kMaxN, kMaxLevel, ep);
      double binom = 0.0;
      for (int l = 0; l <= kMaxLevel; ++l) {
        for (int n = 1; n <= kMaxN; ++n) {
          binom = std::max(binom, relative_residual(elliptic_integer(n, l, ep),
                                                    elliptic_binom(n, n - 1, ep.scaled(l, 2 * l))));
        }
      }
      const Params params = elliptic_params(ep);
      return std::vector<CheckRecord>{
          numeric(suite, "lucas/elliptic-recurrence", params, recurrence, cfg),
          numeric(suite, "lucas/elliptic-integer-binom", params, binom, cfg),
      };
    });
  });

  constexpr int kClassicalN = 15;
  const Rational q(2, 3), c(3, 5);
  bool fib = true, naturals = true, qint = true, scaled_qint = true;
  Rational f0(0), f1(1);
  for (int n = 0; n <= kClassicalN; ++n) {
    const Rational qn = (1 - ipow(q, n)) / (1 - q);
    fib = fib && lucas_classical<Rational>(n, 1, 1) == f0;
    naturals = naturals && lucas_classical<Rational>(n, 2, -1) == n;
    qint = qint && lucas_classical<Rational>(n, 1 + q, -q) == qn;
    if (n >= 1) {
      scaled_qint = scaled_qint &&
                    lucas_classical<Rational>(n, c * (1 + q), -c * c * q) == ipow(c, n - 1) * qn;
    }
    f0 = std::exchange(f1, f0 + f1);
  }
  const Params classical{{"n_max", static_cast<long long>(kClassicalN)}};
  out.push_back(exact(suite, "lucas/fibonacci", classical, fib));
  out.push_back(exact(suite, "lucas/naturals", classical, naturals));
  out.push_back(exact(suite, "lucas/q-integers", classical, qint));
  out.push_back(exact(suite, "lucas/scaled-q-integers", classical, scaled_qint));

  constexpr int kScaleN = 8, kScaleLevel = 4;
  const LevelAssignment<Rational> la{
      [](int l) { return Rational(l + 2, l + 3); },
      [](int l) { return Rational(-(2 * l + 1), 7); }};
  const std::function<Rational(int)> factor = [](int l) { return Rational(l + 3, 2 * l + 5); };
  const auto scaled = scale_transform(factor, la);
  bool scaling = true;
  for (int l = 0; l <= kScaleLevel; ++l) {
    for (int n = 0; n <= kScaleN; ++n) {
      const CommutingPoly sym = lucas_level_symbolic(n, l);
      scaling = scaling && evaluate(sym, scaled) == scaling_factor(factor, n, l) * evaluate(sym, la);
    }
  }
  out.push_back(exact(suite, "lucas/scaling-transform",
                      {{"n_max", static_cast<long long>(kScaleN)},
                       {"l_max", static_cast<long long>(kScaleLevel)}},
                      scaling));
  return out;
}

Params range2(const char* a, int a_lo, int a_hi, const char* b, int b_lo, int b_hi) {
  return {{std::string(a) + "_min", static_cast<long long>(a_lo)},
          {std::string(a) + "_max", static_cast<long long>(a_hi)},
          {std::string(b) + "_min", static_cast<long long>(b_lo)},
          {std::string(b) + "_max", static_cast<long long>(b_hi)}};
}

Params range1(const char* a, int lo, int hi) {
  return {{std::string(a) + "_min", static_cast<long long>(lo)},
          {std::string(a) + "_max", static_cast<long long>(hi)}};
}

std::vector<CheckRecord> word_suite() {
  const std::string suite = "word-identities";
  std::vector<CheckRecord> out;

  bool tilings = true;
  for (int n = 0; n <= 12; ++n) tilings = tilings && tilings_oracle(n) == fib_word(n);
  out.push_back(exact(suite, "word/tilings", range1("n", 0, 12), tilings));

  bool recurrences = true;
  for (int n = -6; n <= 10; ++n) {
    recurrences = recurrences && fib_word(n, FibRecurrence::kLeft) == fib_word(n);
  }
  out.push_back(exact(suite, "word/left-right-recurrence", range1("n", -6, 10), recurrences));

  const auto f = fib_word_range(-8, 10);
  bool matrix = true, det = true;
  for (int n = -6; n <= 10; ++n) {
    const Matrix2 m = C_power(n);
    matrix = matrix && m.a11 == f.at(n - 2) * WordPoly::x() && m.a12 == f.at(n - 1) &&
             m.a21 == f.at(n - 1) * WordPoly::x() && m.a22 == f.at(n);
    det = det && nc_det(m) == WordPoly(Rational(n % 2 == 0 ? 1 : -1));
  }
  out.push_back(exact(suite, "word/matrix-power", range1("n", -6, 10), matrix));
  out.push_back(exact(suite, "word/nc-determinant", range1("n", -6, 10), det));

  bool sum = true;
  for (int m = -5; m <= 5; ++m) {
    for (int n = -5; n <= 5; ++n) sum = sum && check_sum_formula(m, n);
  }
  out.push_back(exact(suite, "word/sum-formula", range2("m", -5, 5, "n", -5, 5), sum));

  bool cassini = true;
  for (int n = -4; n <= 6; ++n) {
    for (int k = -3; k <= 3; ++k) cassini = cassini && check_euler_cassini(n, k);
  }
  out.push_back(exact(suite, "word/euler-cassini", range2("n", -4, 6, "k", -3, 3), cassini));
  return out;
}

std::vector<CheckRecord> weighted_suite(const RunConfig& cfg) {
  const std::string suite = "weighted-identities";
  std::vector<CheckRecord> out;

  bool paths = true, theorem = true;
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) paths = paths && lattice_path_oracle(n, k) == weighted_binom(n, k);
    theorem = theorem && binomial_theorem_check(n);
  }
  out.push_back(exact(suite, "weighted/lattice-paths", range1("n", 0, 8), paths));
  out.push_back(exact(suite, "weighted/binomial-theorem", range1("n", 0, 8), theorem));

  bool expansion = true;
  for (int n = 0; n <= 10; ++n) {
    expansion = expansion && normal_order(fib_word(n)) == fib_weighted(n);
  }
  out.push_back(exact(suite, "weighted/fibonacci-normal-form", range1("n", 0, 10), expansion));

  bool sum = true;
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) sum = sum && check_weighted_sum_formula(m, n);
  }
  out.push_back(exact(suite, "weighted/sum-formula", range2("m", -4, 4, "n", -4, 4), sum));

  bool cassini = true;
  for (int n = -4; n <= 6; ++n) {
    for (int k = -2; k <= 2; ++k) cassini = cassini && check_weighted_euler_cassini(n, k);
  }
  out.push_back(exact(suite, "weighted/euler-cassini", range2("n", -4, 6, "k", -2, 2), cassini));

  const Rational q(2, 3);
  const auto env = WeightEnv<Rational>::q_mode(q);
  bool qmode = true;
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) qmode = qmode && evaluate(weighted_binom(n, k), env) == q_binom(n, k, q);
  }
  out.push_back(exact(suite, "weighted/q-degeneration", range1("n", 0, 10), qmode));

  std::vector<CheckRecord> sampled = per_trial(cfg, [&](int trial) {
    return with_generic_params(cfg.seed, static_cast<std::uint64_t>(trial), cfg.p_max,
                               [&](const EllipticParams& ep) {
      double worst = 0.0;
      ExpansionCheck expansion_at(ep);
      for (int n = 0; n <= 10; ++n) {
        const NormalPoly f = fib_weighted(n);
        for (int k = 0; 2 * k <= n; ++k) {
          worst = std::max(worst, expansion_at(f.coefficient(k, n - 2 * k), n - k, k));
        }
      }
      return std::vector<CheckRecord>{
          numeric(suite, "weighted/elliptic-fibonacci", elliptic_params(ep), worst, cfg)};
    });
  });
  std::move(sampled.begin(), sampled.end(), std::back_inserter(out));
  return out;
}

std::vector<CheckRecord> elliptic_cassini_suite(const RunConfig& cfg) {
  const std::string suite = "elliptic-cassini";
  return per_trial(cfg, [&](int trial) {
    return with_generic_params(cfg.seed, static_cast<std::uint64_t>(trial), cfg.p_max,
                               [&](const EllipticParams& ep) {
      double worst = 0.0;
      for (int n = -3; n <= 5; ++n) {
        for (int k = -2; k <= 2; ++k) {
          worst = std::max(worst, check_elliptic_euler_cassini(n, k, ep));
        }
      }
      return std::vector<CheckRecord>{
          numeric(suite, "elliptic-cassini/euler-cassini", elliptic_params(ep), worst, cfg)};
    });
  });
}

std::vector<CheckRecord> run_checks(Suite suite, const RunConfig& cfg) {
  switch (suite) {
    case Suite::kTheta: return theta_suite(cfg);
    case Suite::kEllipticBinom: return elliptic_binom_suite(cfg);
    case Suite::kLucas: return lucas_suite(cfg);
    case Suite::kWordIdentities: return word_suite();
    case Suite::kWeightedIdentities: return weighted_suite(cfg);
    case Suite::kEllipticCassini: return elliptic_cassini_suite(cfg);
    case Suite::kAll: break;
  }
  std::vector<CheckRecord> out;
  for (const auto& [s, name] : kSuiteNames) {
    if (s == Suite::kAll) continue;
    auto part = run_checks(s, cfg);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

// --------------------------------------------------------------- rendering

nlohmann::ordered_json param_json(const ParamValue& v) {
  if (const auto* i = std::get_if<long long>(&v)) return *i;
  const Complex z = std::get<Complex>(v);
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [name, v] : params) {
    if (!out.empty()) out += ' ';
    out += name + '=';
    if (const auto* i = std::get_if<long long>(&v)) {
      out += std::to_string(*i);
    } else {
      out += to_string(std::get<Complex>(v));
    }
  }
  return out;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  for (const auto& [s, n] : kSuiteNames) {
    if (s == suite) return n;
  }
  return "unknown";
}

VerificationReport run_suite(Suite suite, const RunConfig& cfg) {
  cfg.validate();
  VerificationReport report;
  report.suite = std::string(suite_name(suite));
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.checks = run_checks(suite, cfg);
  for (const CheckRecord& c : report.checks) {
    if (c.residual) report.max_residual = std::max(report.max_residual, *c.residual);
    report.pass = report.pass && c.pass;
  }
  return report;
}

std::string render_report(const VerificationReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["suite"] = report.suite;
      j["seed"] = report.seed;
      j["trials"] = report.trials;
      j["checks"] = nlohmann::ordered_json::array();
      for (const CheckRecord& c : report.checks) {
        nlohmann::ordered_json rec;
        rec["id"] = c.id;
        rec["params"] = nlohmann::ordered_json::object();
        for (const auto& [name, v] : c.params) rec["params"][name] = param_json(v);
        if (c.residual) {
          rec["residual"] = *c.residual;
        } else {
          rec["exact"] = c.pass;
        }
        rec["pass"] = c.pass;
        j["checks"].push_back(std::move(rec));
      }
      j["max_residual"] = report.max_residual;
      j["pass"] = report.pass;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "suite,id,residual,pass\n";
      for (const CheckRecord& c : report.checks) {
        os << c.suite << ',' << c.id << ',' << (c.residual ? to_string(*c.residual) : "exact")
           << ',' << (c.pass ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::kText:
      for (const CheckRecord& c : report.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << ' '
           << (c.residual ? "residual=" + to_string(*c.residual) : std::string("exact"));
        if (!c.params.empty()) os << ' ' << params_text(c.params);
        os << '\n';
      }
      os << "suite=" << report.suite << " seed=" << report.seed << " trials=" << report.trials
         << " max_residual=" << to_string(report.max_residual)
         << (report.pass ? " PASS" : " FAIL") << '\n';
      break;
  }
  return os.str();
}

}  // namespace lucas_elliptica
