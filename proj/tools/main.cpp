// lucas-elliptica: evaluate theta functions, elliptic binomials, Lucas
// sequences and Fibonacci polynomials, and run the verification suites.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 bad flags, parse
// or domain error.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lucas_elliptica/elliptic_core.hpp"
#include "lucas_elliptica/elliptic_poly.hpp"
#include "lucas_elliptica/harness.hpp"
#include "lucas_elliptica/lucas_dynamical.hpp"
#include "lucas_elliptica/scalar_theta.hpp"
#include "lucas_elliptica/weighted_algebra.hpp"
#include "lucas_elliptica/word_algebra.hpp"

namespace le = lucas_elliptica;

namespace {

constexpr int kExitSuiteFailed = 1;
constexpr int kExitUsage = 2;

le::Rational parse_rational(const std::string& text) {
  try {
    return le::Rational(text);
  } catch (const std::exception&) {
    throw le::ParseError("cannot parse rational \"" + text + "\"");
  }
}

struct ParamFlags {
  std::string a = "0.5+0.1i", b = "0.7-0.2i", q = "0.9+0.15i", p = "0.2";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--a", a, "parameter a (RE+IMi)")->capture_default_str();
    cmd.add_option("--b", b, "parameter b (RE+IMi)")->capture_default_str();
    cmd.add_option("--q", q, "base q (RE+IMi, or a rational in q mode)")->capture_default_str();
    cmd.add_option("--p", p, "nome p (RE+IMi)")->capture_default_str();
  }

  le::EllipticParams elliptic() const {
    le::EllipticParams ep;
    ep.a = le::parse_complex(a);
    ep.b = le::parse_complex(b);
    ep.q = le::parse_complex(q);
    ep.p = le::parse_complex(p);
    ep.validate();
    return ep;
  }
};

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("LUCAS_ELLIPTICA_SEED");
  if (raw == nullptr || *raw == '\0') return le::kDefaultSeed;
  const std::string_view s(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw le::DomainError("LUCAS_ELLIPTICA_SEED is not an unsigned 64-bit integer: " +
                          std::string(s));
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic Lucas sequences and weighted Fibonacci polynomials"};
  app.require_subcommand(1);

  // theta
  auto* theta_cmd = app.add_subcommand("theta", "theta(z;p) and its identity residuals");
  std::string z_text, p_text, u_text = "1.3+0.2i", v_text = "0.6-0.4i", w_text = "2.1+0.5i";
  theta_cmd->add_option("--z", z_text, "argument z (RE+IMi)")->required();
  theta_cmd->add_option("--p", p_text, "nome p (RE+IMi)")->required();
  theta_cmd->add_option("--u", u_text, "addition formula u")->capture_default_str();
  theta_cmd->add_option("--v", v_text, "addition formula v")->capture_default_str();
  theta_cmd->add_option("--w", w_text, "addition formula w")->capture_default_str();

  // ellbin
  auto* ellbin_cmd = app.add_subcommand("ellbin", "elliptic, weighted or q-binomial coefficient");
  int bin_n = 0, bin_k = 0;
  std::string bin_mode = "elliptic";
  ParamFlags bin_params;
  ellbin_cmd->add_option("-n", bin_n, "upper index")->required();
  ellbin_cmd->add_option("-k", bin_k, "lower index")->required();
  ellbin_cmd->add_option("--mode", bin_mode, "elliptic | weighted | q")
      ->check(CLI::IsMember({"elliptic", "weighted", "q"}))
      ->capture_default_str();
  bin_params.add_to(*ellbin_cmd);

  // lucas
  auto* lucas_cmd = app.add_subcommand("lucas", "Lucas sequence values");
  int lucas_n = 0, lucas_level = 0;
  std::string lucas_mode = "elliptic", P_text = "1", Q_text = "1";
  ParamFlags lucas_params;
  lucas_cmd->add_option("-n", lucas_n, "index n >= 0")->required();
  lucas_cmd->add_option("--level", lucas_level, "level l >= 0")->capture_default_str();
  lucas_cmd->add_option("--mode", lucas_mode, "symbolic | classical | elliptic")
      ->check(CLI::IsMember({"symbolic", "classical", "elliptic"}))
      ->capture_default_str();
  lucas_cmd->add_option("--P", P_text, "classical P (rational)")->capture_default_str();
  lucas_cmd->add_option("--Q", Q_text, "classical Q (rational)")->capture_default_str();
  lucas_params.add_to(*lucas_cmd);

  // fib
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci polynomial F_n");
  int fib_n = 0;
  std::string fib_mode = "word";
  ParamFlags fib_params;
  fib_cmd->add_option("-n", fib_n, "index n (any integer)")->required();
  fib_cmd->add_option("--mode", fib_mode, "word | weighted | elliptic | q")
      ->check(CLI::IsMember({"word", "weighted", "elliptic", "q"}))
      ->capture_default_str();
  fib_params.add_to(*fib_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite_text = "all", format_text = "json";
  le::RunConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  verify_cmd->add_option("--suite", suite_text,
                         "theta | elliptic-binom | lucas | word-identities | "
                         "weighted-identities | elliptic-cassini | all")
      ->capture_default_str();
  verify_cmd->add_option("--trials", cfg.trials, "sampled parameter sets")->capture_default_str();
  verify_cmd->add_option("--seed", seed_flag, "seed (default: $LUCAS_ELLIPTICA_SEED)");
  verify_cmd->add_option("--eps", cfg.eps_report, "residual threshold")->capture_default_str();
  verify_cmd->add_option("--p-max", cfg.p_max, "largest sampled |p|")->capture_default_str();
  verify_cmd->add_option("--format", format_text, "json | csv | text")->capture_default_str();
  verify_cmd->add_option("--jobs", cfg.jobs, "worker threads, 0 = all cores")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*theta_cmd) {
      const le::Complex z = le::parse_complex(z_text), p = le::parse_complex(p_text);
      const le::Complex u = le::parse_complex(u_text), v = le::parse_complex(v_text),
                        w = le::parse_complex(w_text);
      std::cout << le::to_string(le::theta(z, p)) << '\n';
      std::cout << "inversion_residual " << le::to_string(le::inversion_residual(z, p)) << '\n';
      std::cout << "quasi_periodicity_residual "
                << (p == le::Complex{} ? std::string("n/a")
                                       : le::to_string(le::quasi_periodicity_residual(z, p)))
                << '\n';
      std::cout << "addition_residual " << le::to_string(le::addition_residual(u, v, w, z, p))
                << '\n';
    } else if (*ellbin_cmd) {
      if (bin_mode == "q") {
        std::cout << le::q_binom(bin_n, bin_k, parse_rational(bin_params.q)).str() << '\n';
      } else if (bin_mode == "weighted") {
        std::cout << le::weighted_binom(bin_n, bin_k).to_string() << '\n';
      } else {
        std::cout << le::to_string(le::elliptic_binom(bin_n, bin_k, bin_params.elliptic()))
                  << '\n';
      }
    } else if (*lucas_cmd) {
      if (lucas_n < 0 || lucas_level < 0) throw le::DomainError("n and level must be nonnegative");
      if (lucas_mode == "symbolic") {
        std::cout << le::lucas_level_symbolic(lucas_n, lucas_level).to_string() << '\n';
      } else if (lucas_mode == "classical") {
        std::cout << le::lucas_classical(lucas_n, parse_rational(P_text), parse_rational(Q_text))
                         .str()
                  << '\n';
      } else {
        const le::EllipticParams ep = lucas_params.elliptic();
        std::cout << le::to_string(le::elliptic_integer(lucas_n, lucas_level, ep)) << '\n';
      }
    } else if (*fib_cmd) {
      if (fib_mode == "word") {
        std::cout << le::fib_word(fib_n).to_string() << '\n';
      } else if (fib_mode == "weighted") {
        std::cout << le::fib_weighted(fib_n).to_string() << '\n';
      } else if (fib_mode == "q") {
        const auto env = le::WeightEnv<le::Rational>::q_mode(parse_rational(fib_params.q));
        std::cout << le::to_string(le::fib_weighted(fib_n, env)) << '\n';
      } else {
        std::cout << le::to_string(le::fib_elliptic(fib_n).evaluate(fib_params.elliptic()))
                  << '\n';
      }
    } else if (*verify_cmd) {
      const auto suite = le::parse_suite(suite_text);
      if (!suite) throw le::DomainError("unknown suite: " + suite_text);
      const auto format = le::parse_output_format(format_text);
      if (!format) throw le::DomainError("unknown format: " + format_text);
      cfg.output_format = *format;
      cfg.seed = seed_flag ? *seed_flag : seed_from_env();
      const le::VerificationReport report = le::run_suite(*suite, cfg);
      std::cout << le::render_report(report, cfg.output_format);
      return report.pass ? 0 : kExitSuiteFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
