#include "homlie/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>

#include "homlie/claims.hpp"
#include "homlie/errors.hpp"
#include "homlie/oscillator.hpp"
#include "homlie/parser.hpp"
#include "homlie/report_io.hpp"

namespace homlie {

namespace {

constexpr std::int64_t kDefaultWindow = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t default_window() {
  const char* env = std::getenv("HOMLIE_DEFAULT_WINDOW");
  if (env == nullptr || *env == '\0') return kDefaultWindow;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("HOMLIE_DEFAULT_WINDOW must be a positive integer, got '") + env + "'");
  return v;
}

Cocycle cocycle_named(const std::string& which) {
  if (which == "beta") return builtin_beta();
  if (which == "gamma") return builtin_gamma();
  if (which.rfind("file:", 0) == 0) return load_cocycle_file(which.substr(5));
  throw UsageError("unknown cocycle '" + which + "' (expected beta, gamma or file:<path>)");
}

HomAlgebra algebra_named(const std::string& name) {
  if (name == "wq") return make_wq();
  if (name == "w22") return make_w22_classical();
  if (name.rfind("ext:", 0) == 0) return central_extend(make_wq(), cocycle_named(name.substr(4)));
  throw UsageError("unknown algebra '" + name + "' (expected wq, w22 or ext:<cocycle>)");
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects m,n");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const std::int64_t m = std::stoll(a, &u1), n = std::stoll(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw UsageError("--pair expects two integers m,n, got '" + text + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::int64_t window = 0;
  try {
    window = default_window();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact checks for the q-deformed W(2,2) Hom-Lie algebra", "homlie"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  bool timings = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--window", window, "Truncation window N (degrees in [-N, N])")->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  app.add_flag("--timings", timings, "Include per-report timings");

  std::string algebra = "wq", which, pair, equivariance = "off";
  std::optional<std::int64_t> lemma_n;
  std::int64_t sector = 0, degree = 0;
  int k = 0;
  bool q_bracket = false;

  auto* check = app.add_subcommand("check", "Verify claims")->require_subcommand(1);
  auto* jacobi = check->add_subcommand("jacobi", "Hom-Jacobi identity");
  jacobi->add_option("--algebra", algebra, "wq, w22 or ext:<cocycle>");
  auto* multiplicative = check->add_subcommand("multiplicative", "alpha([x,y]) = [alpha(x), alpha(y)]");
  multiplicative->add_option("--algebra", algebra, "wq, w22 or ext:<cocycle>");
  auto* cocycle = check->add_subcommand("cocycle", "2-cocycle identity and alpha-invariance");
  cocycle->add_option("--which", which, "beta, gamma or file:<path>")->required();
  cocycle->add_option("--algebra", algebra, "wq, w22 or ext:<cocycle>");
  auto* lemmas = check->add_subcommand("lemmas", "H^1(W^0, W^n) = 0 and Hom(W^m, W^n) = 0");
  lemmas->add_option("--n", lemma_n, "n != 0 for the H^1 lemma");
  lemmas->add_option("--pair", pair, "m,n with m != n for the Hom lemma");
  auto* realization = check->add_subcommand("realization", "Oscillator realization of W(2,2)");
  realization->add_flag("--q-bracket", q_bracket, "Report operator q-bracket residuals instead");
  auto* all = check->add_subcommand("all", "Every claim check");

  auto* solve = app.add_subcommand("solve", "Exact solution spaces")->require_subcommand(1);
  auto* h2 = solve->add_subcommand("h2", "Second cohomology with trivial coefficients");
  h2->add_option("--sector", sector, "Degree sector d");
  h2->add_option("--algebra", algebra, "wq, w22 or ext:<cocycle>");
  auto* der = solve->add_subcommand("der", "alpha^k-derivations of degree s");
  der->add_option("--k", k, "Twist power")->check(CLI::NonNegativeNumber);
  der->add_option("--degree", degree, "Degree s");
  der->add_option("--equivariance", equivariance, "Enforce D o alpha = alpha o D")
      ->check(CLI::IsMember({"on", "off", "both"}));
  der->add_option("--algebra", algebra, "wq or w22");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Invocation inv;
  inv.timings = timings;
  inv.parameters["window"] = std::to_string(window);
  std::vector<Report> reports;
  try {
    const Window w(window);
    if (jacobi->parsed()) {
      inv.command = "check jacobi";
      inv.parameters["algebra"] = algebra;
      reports.push_back(hom_jacobi_check(algebra_named(algebra), w));
    } else if (multiplicative->parsed()) {
      inv.command = "check multiplicative";
      inv.parameters["algebra"] = algebra;
      reports.push_back(multiplicativity_check(algebra_named(algebra), w));
    } else if (cocycle->parsed()) {
      inv.command = "check cocycle";
      inv.parameters["algebra"] = algebra;
      inv.parameters["which"] = which;
      const HomAlgebra A = algebra_named(algebra);
      const Cocycle psi = cocycle_named(which);
      reports.push_back(verify_cocycle(A, psi, w));
      reports.push_back(alpha_invariance_check(psi, A, w));
    } else if (lemmas->parsed()) {
      inv.command = "check lemmas";
      inv.parameters.erase("window");
      if (!lemma_n && pair.empty()) throw UsageError("check lemmas needs --n or --pair");
      if (lemma_n) {
        inv.parameters["n"] = std::to_string(*lemma_n);
        reports.push_back(lemma_h1_w0_check(*lemma_n));
      }
      if (!pair.empty()) {
        const auto [m, n] = parse_pair(pair);
        inv.parameters["pair"] = std::to_string(m) + "," + std::to_string(n);
        reports.push_back(lemma_hom_vanish_check(m, n));
      }
    } else if (realization->parsed()) {
      inv.command = "check realization";
      inv.parameters["q_bracket"] = q_bracket ? "true" : "false";
      reports.push_back(q_bracket ? q_realization_report(w) : verify_realization(w));
    } else if (all->parsed()) {
      inv.command = "check all";
      reports = claim_sweep(w);
    } else if (h2->parsed()) {
      inv.command = "solve h2";
      inv.parameters["algebra"] = algebra;
      inv.parameters["sector"] = std::to_string(sector);
      reports.push_back(h2_report(algebra_named(algebra), sector, w));
    } else if (der->parsed()) {
      inv.command = "solve der";
      inv.parameters["algebra"] = algebra;
      inv.parameters["k"] = std::to_string(k);
      inv.parameters["degree"] = std::to_string(degree);
      inv.parameters["equivariance"] = equivariance;
      if (algebra != "wq" && algebra != "w22") throw UsageError("solve der supports --algebra wq or w22");
      const HomAlgebra A = algebra_named(algebra);
      if (equivariance != "on") reports.push_back(derivation_report(A, k, degree, w, false));
      if (equivariance != "off") reports.push_back(derivation_report(A, k, degree, w, true));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // DomainError, UnknownSymbolError
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  out << (format == "json" ? render_json(inv, reports) : render_text(inv, reports));
  return exit_status(reports);
}

}  // namespace homlie
