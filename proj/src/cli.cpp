#include "jcx/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jcx/asymptotics.hpp"
#include "jcx/errors.hpp"
#include "jcx/measures.hpp"
#include "jcx/quadrature.hpp"
#include "jcx/report.hpp"

namespace jcx {
namespace {

struct Settings {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double p = 2.0;
  std::optional<double> tol;
  std::optional<int> max_nodes;
  std::string format = "json";
  std::string out_path;
  std::string regime;
  std::string measure;
  std::string variant = "paper";
  std::string n_grid;
  std::string alpha_grid;
  std::string lambda_grid = "1.5:12:2";
  std::vector<double> betas;
  int rule_order = 1;
  int compare_n = 1000;
  bool verify = false;
};

std::int64_t max_evaluations_from_env() {
  const char* raw = std::getenv("JCX_MAX_EVALS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxEvaluations;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !(v >= 1.0) || v > 9e18) throw DomainError("JCX_MAX_EVALS must be a positive number");
  return static_cast<std::int64_t>(v);
}

IntegrationOptions integration_options(const Settings& s) {
  IntegrationOptions io;
  io.max_evaluations = max_evaluations_from_env();
  if (s.max_nodes) {
    // A cell refined to level l holds 2^{l+1} + 1 abscissae.
    int level = 0;
    while (level < kTanhSinhMaxLevel && (2 << (level + 1)) + 1 <= *s.max_nodes) ++level;
    if (level < 3) throw DomainError("--max-nodes must be at least 17");
    io.max_level = level;
  }
  return io;
}

Regime parse_regime(const std::string& r) { return r == "alpha" ? Regime::Alpha : Regime::Degree; }

W2Variant parse_variant(const std::string& v) { return v == "derived" ? W2Variant::DerivedCorrection : W2Variant::Paper; }

// Writes to --out when given, otherwise to the output stream.
void emit(const Settings& s, std::ostream& out, const std::string& text) {
  if (s.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + s.out_path);
  file << text;
  if (!file) throw DomainError("failed writing " + s.out_path);
}

void cmd_measure(const Settings& s, std::ostream& out) {
  MeasureOptions options;
  options.tol = s.tol;
  options.integration = integration_options(s);
  options.verify_entropy = s.verify;
  const MeasureSet m = compute_measures(PolyParams(s.n, s.alpha, s.beta), options);
  emit(s, out, s.format == "csv" ? measure_to_csv(m) : measure_to_json(m) + "\n");
}

PredictionQuery query_from(const Settings& s) {
  PredictionQuery q;
  q.regime = parse_regime(s.regime);
  q.measure = s.measure;
  q.n = s.n;
  q.alpha = s.alpha;
  q.beta = s.beta;
  q.p = s.p;
  q.variant = parse_variant(s.variant);
  return q;
}

void cmd_asym(const Settings& s, std::optional<double> at, std::ostream& out) {
  const AsymptoticPrediction pred = prediction_for(query_from(s));
  nlohmann::json j;
  j["measure"] = pred.measure;
  j["regime"] = to_string(pred.regime);
  j["law"] = to_string(pred.law);
  if (pred.law == GrowthLaw::Composite) {
    j["coefficient_or_value"] = nullptr;
  } else {
    j["coefficient_or_value"] = pred.coefficient;
  }
  if (pred.law == GrowthLaw::NPowMinus2Beta) j["exponent"] = pred.exponent;
  j["applicability"] = pred.applicability;
  if (at) {
    j["at"] = *at;
    if (pred.log_value_fn) {
      j["log_value"] = pred.log_evaluate(*at);
    } else {
      j["value"] = pred.evaluate(*at);
    }
  }
  emit(s, out, j.dump(2) + "\n");
}

void cmd_sweep(const Settings& s, std::ostream& out) {
  SweepRequest request;
  request.query = query_from(s);
  const bool degree = request.query.regime == Regime::Degree;
  const std::string& spec = degree ? s.n_grid : s.alpha_grid;
  if (spec.empty()) throw DomainError(degree ? "degree sweep needs --n-grid" : "alpha sweep needs --alpha-grid");
  request.grid = geometric_grid(spec, degree);
  request.tol = s.tol;
  request.integration = integration_options(s);
  const SweepReport report = run_sweep(request);
  std::ostringstream text;
  write_sweep_csv(report, text);
  emit(s, out, text.str());
}

void cmd_lmc_compare(const Settings& s, std::ostream& out) {
  std::ostringstream text;
  write_lmc_compare_csv(lmc_compare(geometric_grid(s.lambda_grid, false), s.betas, s.compare_n), text);
  emit(s, out, text.str());
}

void cmd_rule(const Settings& s, std::ostream& out) {
  if (s.max_nodes && s.rule_order > *s.max_nodes) throw DomainError("rule order exceeds --max-nodes");
  std::ostringstream text;
  write_rule_csv(gauss_jacobi_rule(s.alpha, s.beta, s.rule_order), text);
  emit(s, out, text.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Spreading and complexity measures of Jacobi polynomials", "jcx"};
  app.require_subcommand(1);

  auto add_params = [&s](CLI::App* cmd) {
    cmd->add_option("-n,--degree", s.n, "polynomial degree")->check(CLI::NonNegativeNumber);
    cmd->add_option("-a,--alpha", s.alpha, "weight exponent at x = 1");
    cmd->add_option("-b,--beta", s.beta, "weight exponent at x = -1");
  };
  auto add_numeric = [&s](CLI::App* cmd) {
    cmd->add_option("--tol", s.tol, "absolute integration tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-nodes", s.max_nodes, "tanh-sinh abscissae per cell")->check(CLI::PositiveNumber);
  };
  auto add_prediction = [&s](CLI::App* cmd) {
    cmd->add_option("--regime", s.regime)->required()->check(CLI::IsMember({"degree", "alpha"}));
    cmd->add_option("--measure", s.measure)
        ->required()
        ->check(CLI::IsMember({"ccr", "fisher", "variance", "e", "i", "s", "ls", "cfs", "w2", "clmc", "np"}));
    cmd->add_option("-p,--order", s.p, "Lq order for np")->check(CLI::PositiveNumber);
    cmd->add_option("--variant", s.variant)->check(CLI::IsMember({"paper", "derived"}));
  };

  CLI::App* measure = app.add_subcommand("measure", "all measures of one polynomial");
  add_params(measure);
  measure->get_option("--degree")->required();
  add_numeric(measure);
  measure->add_option("--format", s.format)->check(CLI::IsMember({"json", "csv"}));
  measure->add_option("--out", s.out_path);
  measure->add_flag("--verify", s.verify, "cross-check S against a direct -int rho ln rho");

  CLI::App* asym = app.add_subcommand("asym", "leading-order asymptotic prediction");
  add_params(asym);
  add_prediction(asym);
  asym->add_option("--out", s.out_path);

  CLI::App* sweep = app.add_subcommand("sweep", "computed values against a prediction over a grid");
  add_params(sweep);
  add_prediction(sweep);
  add_numeric(sweep);
  sweep->add_option("--n-grid", s.n_grid, "start:stop:factor");
  sweep->add_option("--alpha-grid", s.alpha_grid, "start:stop:factor");
  sweep->add_option("--out", s.out_path);

  CLI::App* compare = app.add_subcommand("lmc-compare", "Jacobi and Gegenbauer LMC constants by lambda");
  compare->add_option("--lambda-grid", s.lambda_grid, "start:stop:factor")->capture_default_str();
  compare->add_option("--betas", s.betas, "comma-separated beta list")->delimiter(',');
  compare->add_option("-n,--degree", s.compare_n, "degree for the log n and n^(-2 beta) rows")->capture_default_str();
  compare->add_option("--out", s.out_path);

  CLI::App* rule = app.add_subcommand("rule", "dump a Gauss-Jacobi rule");
  rule->add_option("-a,--alpha", s.alpha);
  rule->add_option("-b,--beta", s.beta);
  rule->add_option("-m,--order", s.rule_order)->required()->check(CLI::PositiveNumber);
  rule->add_option("--max-nodes", s.max_nodes)->check(CLI::PositiveNumber);
  rule->add_option("--out", s.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (measure->parsed()) {
      cmd_measure(s, out);
    } else if (asym->parsed()) {
      const bool degree = s.regime == "degree";
      std::optional<double> at;
      if (degree && asym->count("--degree") > 0) at = s.n;
      if (!degree && asym->count("--alpha") > 0) at = s.alpha;
      cmd_asym(s, at, out);
    } else if (sweep->parsed()) {
      cmd_sweep(s, out);
    } else if (compare->parsed()) {
      cmd_lmc_compare(s, out);
    } else if (rule->parsed()) {
      cmd_rule(s, out);
    }
  } catch (const UnsupportedClassError& e) {
    err << "jcx: " << e.what() << " (applies when " << e.predicate() << ")\n";
    return kExitUnsupportedClass;
  } catch (const BudgetError& e) {
    err << "jcx: " << e.what() << " (best estimate " << format_double(e.best_estimate()) << ", error estimate "
        << format_double(e.error_estimate()) << ")\n";
    return kExitNumericalBudget;
  } catch (const OverflowError& e) {
    err << "jcx: " << e.what() << "\n";
    return kExitNumericalBudget;
  } catch (const EvaluationError& e) {
    err << "jcx: " << e.what() << " at x = " << format_double(e.node()) << "\n";
    return kExitNumericalBudget;
  } catch (const std::domain_error& e) {
    err << "jcx: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::runtime_error& e) {
    err << "jcx: " << e.what() << "\n";
    return kExitNumericalBudget;
  }
  return kExitOk;
}

}  // namespace jcx
