#include "jcx/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "jcx/errors.hpp"

namespace jcx {
namespace {

using nlohmann::json;

json extended_to_json(const ExtendedReal& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

ExtendedReal extended_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw DomainError("measure_from_json: unexpected string " + j.dump());
    return ExtendedReal::infinity();
  }
  return j.get<double>();
}

json optional_to_json(const std::optional<double>& v) {
  if (!v) return "unsupported";
  return *v;
}

std::optional<double> optional_from_json(const json& j) {
  if (j.is_string()) return std::nullopt;
  return j.get<double>();
}

std::string extended_to_text(const ExtendedReal& v) { return v.is_infinite() ? "inf" : format_double(v.value()); }

std::string optional_to_text(const std::optional<double>& v) { return v ? format_double(*v) : "unsupported"; }

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return v;
}

struct SweepPoint {
  double numeric;
  double log_numeric;  // used for the ratio when the prediction lives on the log scale
  double error;
};

SweepPoint measure_at(const std::string& m, const PolyParams& params, double tol, const IntegrationOptions& io,
                      double p) {
  constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;
  auto plain = [](double v, double err) { return SweepPoint{v, std::log(std::fabs(v)), err}; };
  if (m == "ccr") return plain(cramer_rao(params).value(), 0.0);
  if (m == "fisher") return plain(fisher_info(params).value(), 0.0);
  if (m == "variance") return plain(variance(params), 0.0);
  if (m == "i") return plain(shannon_I(params), 0.0);
  if (m == "w2") return plain(disequilibrium_w2(params), 0.0);
  if (m == "e") {
    const IntegralResult r = shannon_E_numeric(params, tol, io);
    return plain(r.value, r.abs_error_estimate);
  }
  if (m == "s") {
    const IntegralResult r = shannon_entropy(params, tol, io);
    return plain(r.value, r.abs_error_estimate);
  }
  if (m == "ls") {
    const IntegralResult r = spreading_length(params, tol, io);
    return plain(r.value, r.abs_error_estimate);
  }
  if (m == "cfs") {
    const double f = fisher_info(params).value();
    const IntegralResult ls = spreading_length(params, tol, io);
    const double v = f * ls.value * ls.value / kTwoPiE;
    return plain(v, 2.0 * v * ls.abs_error_estimate / ls.value);
  }
  if (m == "clmc") {
    const double w2 = disequilibrium_w2(params);
    const IntegralResult ls = spreading_length(params, tol, io);
    return plain(w2 * ls.value, w2 * ls.abs_error_estimate);
  }
  if (m == "np") {
    const double log_n = log_lq_norm(params, p, 1e-12, io);
    return {std::exp(log_n), log_n, 0.0};
  }
  throw DomainError("run_sweep: unknown measure '" + m + "'");
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string measure_to_json(const MeasureSet& m, int indent) {
  json j;
  j["n"] = m.params.degree();
  j["alpha"] = m.params.alpha();
  j["beta"] = m.params.beta();
  j["variance"] = m.variance;
  j["fisher"] = extended_to_json(m.fisher);
  j["shannon_E"] = m.shannon_E;
  j["shannon_I"] = m.shannon_I;
  j["shannon_S"] = m.shannon_S;
  j["spreading_length"] = m.spreading_length;
  j["w2"] = optional_to_json(m.w2);
  json lq = json::object();
  for (const auto& [p, v] : m.log_lq_norms) lq[format_double(p)] = v;
  j["log_lq_norms"] = lq;
  j["c_cr"] = extended_to_json(m.c_cr);
  j["c_fs"] = extended_to_json(m.c_fs);
  j["c_lmc"] = optional_to_json(m.c_lmc);
  j["errors"] = m.errors;
  return j.dump(indent);
}

MeasureSet measure_from_json(std::string_view text) {
  const json j = json::parse(text);
  MeasureSet m;
  m.params = PolyParams(j.at("n").get<int>(), j.at("alpha").get<double>(), j.at("beta").get<double>());
  m.variance = j.at("variance").get<double>();
  m.fisher = extended_from_json(j.at("fisher"));
  m.shannon_E = j.at("shannon_E").get<double>();
  m.shannon_I = j.at("shannon_I").get<double>();
  m.shannon_S = j.at("shannon_S").get<double>();
  m.spreading_length = j.at("spreading_length").get<double>();
  m.w2 = optional_from_json(j.at("w2"));
  for (const auto& [key, v] : j.at("log_lq_norms").items()) {
    m.log_lq_norms[parse_number(key, "measure_from_json")] = v.get<double>();
  }
  m.c_cr = extended_from_json(j.at("c_cr"));
  m.c_fs = extended_from_json(j.at("c_fs"));
  m.c_lmc = optional_from_json(j.at("c_lmc"));
  m.errors = j.at("errors").get<std::map<std::string, double>>();
  return m;
}

std::string measure_to_csv(const MeasureSet& m) {
  std::ostringstream out;
  out << "n,alpha,beta,variance,fisher,shannon_E,shannon_I,shannon_S,spreading_length,w2,c_cr,c_fs,c_lmc,errors\n";
  out << m.params.degree() << ',' << format_double(m.params.alpha()) << ',' << format_double(m.params.beta()) << ','
      << format_double(m.variance) << ',' << extended_to_text(m.fisher) << ',' << format_double(m.shannon_E) << ','
      << format_double(m.shannon_I) << ',' << format_double(m.shannon_S) << ','
      << format_double(m.spreading_length) << ',' << optional_to_text(m.w2) << ',' << extended_to_text(m.c_cr)
      << ',' << extended_to_text(m.c_fs) << ',' << optional_to_text(m.c_lmc) << ',';
  bool first = true;
  for (const auto& [k, v] : m.errors) {
    if (!first) out << ';';
    out << k << '=' << format_double(v);
    first = false;
  }
  out << '\n';
  return out.str();
}

std::vector<double> geometric_grid(std::string_view spec, bool integer) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw DomainError("grid must be start:stop:factor, got '" + std::string(spec) + "'");
  const double lo = parse_number(parts[0], "grid start");
  const double hi = parse_number(parts[1], "grid stop");
  const double factor = parse_number(parts[2], "grid factor");
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("grid needs 0 < start <= stop");
  if (!(factor > 1.0)) throw DomainError("grid factor must exceed 1");
  std::vector<double> out;
  for (double v = lo; v <= hi * (1.0 + 1e-12); v *= factor) {
    const double value = integer ? std::round(v) : v;
    if (out.empty() || value != out.back()) out.push_back(value);
  }
  return out;
}

SweepReport run_sweep(const SweepRequest& request) {
  const PredictionQuery& q = request.query;
  const AsymptoticPrediction prediction = prediction_for(q);
  SweepReport report;
  report.regime = q.regime;
  report.measure = q.measure;
  std::ostringstream fixed;
  if (q.regime == Regime::Degree) {
    fixed << "alpha=" << format_double(q.alpha) << ";beta=" << format_double(q.beta);
  } else {
    fixed << "n=" << q.n << ";beta=" << format_double(q.beta);
  }
  if (q.measure == "np") fixed << ";p=" << format_double(q.p);
  if (q.regime == Regime::Alpha && (q.measure == "w2" || q.measure == "clmc")) {
    fixed << ";variant=" << to_string(q.variant);
  }
  report.fixed_params = fixed.str();

  std::vector<double> grid = request.grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (double x : grid) {
    const PolyParams params = q.regime == Regime::Degree ? PolyParams(static_cast<int>(x), q.alpha, q.beta)
                                                         : PolyParams(q.n, x, q.beta);
    const double tol = request.tol.value_or(default_tolerance(params.degree()));
    const SweepPoint point = measure_at(q.measure, params, tol, request.integration, q.p);
    SweepRow row{x, point.numeric, prediction.evaluate(x), 0.0, point.error};
    if (prediction.log_value_fn) {
      row.ratio = std::exp(point.log_numeric - prediction.log_evaluate(x));
    } else {
      row.ratio = row.numeric / row.predicted;
    }
    report.rows.push_back(row);
  }
  return report;
}

void write_sweep_csv(const SweepReport& report, std::ostream& out) {
  out << "sweep_value,numeric,predicted,ratio,error_estimate\n";
  for (const SweepRow& r : report.rows) {
    out << format_double(r.sweep_value) << ',' << format_double(r.numeric) << ',' << format_double(r.predicted)
        << ',' << format_double(r.ratio) << ',' << format_double(r.error_estimate) << '\n';
  }
}

std::vector<LmcCompareRow> lmc_compare(const std::vector<double>& lambdas, const std::vector<double>& betas,
                                       int n) {
  auto constant = [n](double a, double b) -> std::optional<double> {
    try {
      return clmc_degree(a, b).evaluate(n);
    } catch (const UnsupportedClassError&) {
      return std::nullopt;
    }
  };
  std::vector<LmcCompareRow> rows;
  for (double lambda : lambdas) {
    if (!(lambda > 1.0)) throw DomainError("lmc_compare: lambda must exceed 1");
    std::vector<double> bs = betas;
    if (bs.empty()) bs = {lambda - 2.0, 2.0, 4.0, 8.0};
    for (double beta : bs) {
      for (const auto& [mapping, alpha] : {std::pair<std::string, double>{"alpha=lambda-2", lambda - 2.0},
                                           std::pair<std::string, double>{"alpha=lambda-1/2", lambda - 0.5}}) {
        rows.push_back({lambda, beta, mapping, alpha, constant(alpha, beta), constant(alpha, alpha)});
      }
    }
  }
  return rows;
}

void write_lmc_compare_csv(const std::vector<LmcCompareRow>& rows, std::ostream& out) {
  out << "lambda,beta,mapping,alpha,c_lmc_jacobi,c_lmc_gegenbauer\n";
  for (const LmcCompareRow& r : rows) {
    out << format_double(r.lambda) << ',' << format_double(r.beta) << ',' << r.mapping << ','
        << format_double(r.alpha) << ',' << optional_to_text(r.jacobi) << ',' << optional_to_text(r.gegenbauer)
        << '\n';
  }
}

void write_rule_csv(const QuadRule& rule, std::ostream& out) {
  const std::vector<double> w = rule.weights();
  out << "index,node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out << i << ',' << format_double(rule.nodes[i]) << ',' << format_double(w[i]) << '\n';
  }
}

}  // namespace jcx
