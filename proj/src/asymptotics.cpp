#include "jcx/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "jcx/errors.hpp"
#include "jcx/specfun.hpp"

namespace jcx {
namespace {

using std::numbers::e;
using std::numbers::ln2;
using std::numbers::pi;

AsymptoticPrediction make(Regime regime, std::string measure, GrowthLaw law, double coefficient,
                          std::string applicability) {
  AsymptoticPrediction p;
  p.regime = regime;
  p.measure = std::move(measure);
  p.law = law;
  p.coefficient = coefficient;
  p.applicability = std::move(applicability);
  return p;
}

constexpr const char* kFisherClasses = "alpha=beta=0; alpha=0, beta>1; beta=0, alpha>1; alpha>1, beta>1";

// n^3 coefficient of F; the (beta = 0, alpha > 1) mirror goes through the swap.
std::pair<double, std::string> fisher_n3(double alpha, double beta, const char* who) {
  if (alpha == 0.0 && beta == 0.0) return {4.0, "alpha=beta=0"};
  if (beta == 0.0 && alpha > 1.0) std::swap(alpha, beta);
  if (alpha == 0.0 && beta > 1.0) {
    return {0.5 * (4.0 + 1.0 / (beta - 1.0) + 1.0 / (beta + 1.0)), "alpha=0, beta>1 (or mirror)"};
  }
  if (alpha > 1.0 && beta > 1.0) return {alpha / (alpha * alpha - 1.0) + beta / (beta * beta - 1.0), "alpha>1, beta>1"};
  throw UnsupportedClassError(std::string(who) + ": Fisher information is infinite outside its finite classes",
                              kFisherClasses);
}

void require_beta_above_one(double beta, const char* who) {
  if (!(beta > 1.0)) throw UnsupportedClassError(std::string(who) + ": law stated for beta > 1 only", "beta > 1");
}

void require_valid_beta(double beta, const char* who) {
  if (!(beta > -1.0)) throw UnsupportedClassError(std::string(who) + ": needs beta > -1", "beta > -1");
}

void require_degree(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": degree must be non-negative");
}

// Gamma(1+4n+2beta) / (2^{2(1+2n+beta)} (n!)^2 Gamma(1+n+beta)^k), k = 1 or 2.
double log_w2_alpha_coefficient(int n, double beta, W2Variant variant) {
  const double nn = n;
  const double power = variant == W2Variant::Paper ? 1.0 : 2.0;
  return log_gamma(1.0 + 4.0 * nn + 2.0 * beta) - 2.0 * (1.0 + 2.0 * nn + beta) * ln2 -
         2.0 * log_gamma(nn + 1.0) - power * log_gamma(1.0 + nn + beta);
}

void require_w2_alpha_class(int n, double beta, const char* who) {
  require_degree(n, who);
  require_valid_beta(beta, who);
  if (!(1.0 + 4.0 * n + 2.0 * beta > 0.0)) {
    throw UnsupportedClassError(std::string(who) + ": Gamma(1+4n+2beta) needs 1+4n+2beta > 0",
                                "1 + 4n + 2 beta > 0");
  }
}

}  // namespace

const char* to_string(Regime regime) { return regime == Regime::Degree ? "degree" : "alpha"; }

const char* to_string(GrowthLaw law) {
  switch (law) {
    case GrowthLaw::Constant: return "constant";
    case GrowthLaw::NCubed: return "n^3";
    case GrowthLaw::LogN: return "log n";
    case GrowthLaw::NPowMinus2Beta: return "n^(-2 beta)";
    case GrowthLaw::Alpha: return "alpha";
    case GrowthLaw::AlphaSquared: return "alpha^2";
    case GrowthLaw::InverseAlpha: return "1/alpha";
    case GrowthLaw::InverseAlphaSquared: return "1/alpha^2";
    case GrowthLaw::LogAlpha: return "log alpha";
    case GrowthLaw::Composite: return "composite";
  }
  return "unknown";
}

const char* to_string(W2Variant variant) { return variant == W2Variant::Paper ? "paper" : "derived"; }

double AsymptoticPrediction::evaluate(double x) const {
  if (value_fn) return value_fn(x);
  if (log_value_fn) return std::exp(log_value_fn(x));
  switch (law) {
    case GrowthLaw::Constant: return coefficient;
    case GrowthLaw::NCubed: return coefficient * x * x * x;
    case GrowthLaw::LogN:
    case GrowthLaw::LogAlpha: return coefficient * std::log(x);
    case GrowthLaw::NPowMinus2Beta: return coefficient * std::pow(x, exponent);
    case GrowthLaw::Alpha: return coefficient * x;
    case GrowthLaw::AlphaSquared: return coefficient * x * x;
    case GrowthLaw::InverseAlpha: return coefficient / x;
    case GrowthLaw::InverseAlphaSquared: return coefficient / (x * x);
    case GrowthLaw::Composite: break;
  }
  throw DomainError("AsymptoticPrediction: composite law without an evaluator");
}

double AsymptoticPrediction::log_evaluate(double x) const {
  if (log_value_fn) return log_value_fn(x);
  return std::log(evaluate(x));
}

AsymptoticPrediction ccr_degree(double alpha, double beta) {
  const auto [f, cls] = fisher_n3(alpha, beta, "ccr_degree");
  return make(Regime::Degree, "ccr", GrowthLaw::NCubed, 0.5 * f, cls);
}

AsymptoticPrediction fisher_degree(double alpha, double beta) {
  const auto [f, cls] = fisher_n3(alpha, beta, "fisher_degree");
  return make(Regime::Degree, "fisher", GrowthLaw::NCubed, f, cls);
}

AsymptoticPrediction variance_degree() {
  return make(Regime::Degree, "variance", GrowthLaw::Constant, 0.5, "alpha, beta > -1");
}

AsymptoticPrediction ls_degree() {
  return make(Regime::Degree, "ls", GrowthLaw::Constant, pi / e, "alpha, beta > -1");
}

AsymptoticPrediction e_degree(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw UnsupportedClassError("e_degree: needs alpha, beta > -1", "alpha, beta > -1");
  return make(Regime::Degree, "e", GrowthLaw::Constant, std::log(pi) - 1.0 - (alpha + beta) * ln2,
              "alpha, beta > -1");
}

AsymptoticPrediction i_degree(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw UnsupportedClassError("i_degree: needs alpha, beta > -1", "alpha, beta > -1");
  return make(Regime::Degree, "i", GrowthLaw::Constant, (alpha + beta) * ln2, "alpha, beta > -1");
}

AsymptoticPrediction s_degree() {
  return make(Regime::Degree, "s", GrowthLaw::Constant, std::log(pi) - 1.0, "alpha, beta > -1");
}

AsymptoticPrediction cfs_degree(double alpha, double beta) {
  const auto [f, cls] = fisher_n3(alpha, beta, "cfs_degree");
  const double ls = pi / e;
  return make(Regime::Degree, "cfs", GrowthLaw::NCubed, f * ls * ls / (2.0 * pi * e), cls);
}

AsymptoticPrediction w2_degree(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw UnsupportedClassError("w2_degree: needs alpha, beta > -1", "alpha, beta > -1");
  // the density reflects under (alpha, beta) -> (beta, alpha), so the smaller exponent sets the class
  const double m = std::min(alpha, beta);
  if (m > 0.0) {
    const double log_c = std::log(3.0) + (alpha + beta - 2.0) * ln2 + log_beta(alpha, beta) - 2.0 * std::log(pi);
    return make(Regime::Degree, "w2", GrowthLaw::Constant, std::exp(log_c), "min(alpha,beta)>0");
  }
  if (m == 0.0) return make(Regime::Degree, "w2", GrowthLaw::LogN, 1.0, "min(alpha,beta)=0");
  AsymptoticPrediction p = make(Regime::Degree, "w2", GrowthLaw::NPowMinus2Beta, 1.0, "-1<min(alpha,beta)<0");
  p.exponent = -2.0 * m;
  return p;
}

AsymptoticPrediction clmc_degree(double alpha, double beta) {
  AsymptoticPrediction p = w2_degree(alpha, beta);
  p.measure = "clmc";
  p.coefficient *= pi / e;
  return p;
}

AsymptoticPrediction ccr_param(int n, double beta) {
  require_degree(n, "ccr_param");
  require_beta_above_one(beta, "ccr_param");
  const double nn = n;
  const double c = (1.0 + beta + 2.0 * nn * beta) * (1.0 + beta + 2.0 * nn * (1.0 + nn + beta)) / (beta * beta - 1.0);
  return make(Regime::Alpha, "ccr", GrowthLaw::Constant, c, "beta>1");
}

AsymptoticPrediction variance_param(int n, double beta) {
  require_degree(n, "variance_param");
  require_valid_beta(beta, "variance_param");
  const double nn = n;
  const double c = 4.0 * ((nn + 1.0) * (nn + beta + 1.0) + nn * (nn + beta));
  return make(Regime::Alpha, "variance", GrowthLaw::InverseAlphaSquared, c, "beta>-1");
}

AsymptoticPrediction f_param(int n, double beta) {
  require_degree(n, "f_param");
  require_beta_above_one(beta, "f_param");
  const double c = (1.0 + beta + 2.0 * n * beta) / (4.0 * (beta * beta - 1.0));
  return make(Regime::Alpha, "fisher", GrowthLaw::AlphaSquared, c, "beta>1");
}

AsymptoticPrediction cfs_param(int n, double beta) {
  require_degree(n, "cfs_param");
  require_beta_above_one(beta, "cfs_param");
  const double c = (1.0 + beta + 2.0 * n * beta) / (8.0 * pi * e * (beta * beta - 1.0));
  return make(Regime::Alpha, "cfs", GrowthLaw::Constant, c, "beta>1");
}

AsymptoticPrediction np_param(int n, double beta, double p) {
  require_degree(n, "np_param");
  require_valid_beta(beta, "np_param");
  if (!(p > 0.0)) throw DomainError("np_param: order p must be positive");
  AsymptoticPrediction out = make(Regime::Alpha, "np", GrowthLaw::Composite, 0.0, "beta>-1, p>0");
  const double nn = n;
  out.log_value_fn = [nn, beta, p](double alpha) {
    return log_gamma_ratio(alpha + nn + 1.0, 2.0 + alpha + nn * p + beta) - log_gamma(nn + 1.0) +
           log_gamma(1.0 + nn * p + beta) + (1.0 + alpha + beta) * ln2;
  };
  return out;
}

AsymptoticPrediction e_param(int n, double beta) {
  require_degree(n, "e_param");
  require_valid_beta(beta, "e_param");
  AsymptoticPrediction out = make(Regime::Alpha, "e", GrowthLaw::Alpha, ln2, "beta>-1");
  const double nn = n;
  const double log_ratio = log_gamma(1.0 + nn + beta) - log_gamma(nn + 1.0);
  const double oscillating = n == 0 ? 0.0 : nn * std::exp(log_gamma_ratio(1.0 + 2.0 * nn + beta, 1.0 + nn + beta));
  const double psi = digamma(1.0 + 2.0 * nn + beta);
  out.value_fn = [=](double alpha) {
    const double la = std::log(alpha);
    return 2.0 * std::pow(alpha, -nn) * oscillating * (psi - la) + (1.0 + alpha + beta) * ln2 + log_ratio -
           (1.0 + beta) * la;
  };
  return out;
}

AsymptoticPrediction i_param(int n, double beta) {
  require_degree(n, "i_param");
  require_valid_beta(beta, "i_param");
  AsymptoticPrediction out = make(Regime::Alpha, "i", GrowthLaw::Alpha, -ln2, "beta>-1");
  const double nn = n;
  const double psi = beta == 0.0 ? 0.0 : beta * digamma(1.0 + nn + beta);
  out.value_fn = [=](double alpha) {
    return -alpha * ln2 + 1.0 + 2.0 * nn + beta - beta * ln2 + (beta == 0.0 ? 0.0 : beta * std::log(alpha)) - psi;
  };
  return out;
}

AsymptoticPrediction s_param() { return make(Regime::Alpha, "s", GrowthLaw::LogAlpha, -1.0, "beta>-1"); }

AsymptoticPrediction ls_param() { return make(Regime::Alpha, "ls", GrowthLaw::InverseAlpha, 1.0, "beta>-1"); }

double s_param_constant(int n, double beta) {
  require_degree(n, "s_param_constant");
  require_valid_beta(beta, "s_param_constant");
  const double nn = n;
  return ln2 + log_gamma(1.0 + nn + beta) - log_gamma(nn + 1.0) + 1.0 + 2.0 * nn + beta -
         (beta == 0.0 ? 0.0 : beta * digamma(1.0 + nn + beta));
}

AsymptoticPrediction w2_param(int n, double beta, W2Variant variant) {
  require_w2_alpha_class(n, beta, "w2_param");
  return make(Regime::Alpha, "w2", GrowthLaw::Alpha, std::exp(log_w2_alpha_coefficient(n, beta, variant)),
              std::string("1+4n+2beta>0; variant=") + to_string(variant));
}

AsymptoticPrediction clmc_param(int n, double beta, W2Variant variant) {
  require_w2_alpha_class(n, beta, "clmc_param");
  return make(Regime::Alpha, "clmc", GrowthLaw::Constant, std::exp(log_w2_alpha_coefficient(n, beta, variant)),
              std::string("1+4n+2beta>0; variant=") + to_string(variant));
}

AsymptoticPrediction prediction_for(const PredictionQuery& q) {
  const std::string& m = q.measure;
  if (q.regime == Regime::Degree) {
    if (m == "ccr") return ccr_degree(q.alpha, q.beta);
    if (m == "fisher") return fisher_degree(q.alpha, q.beta);
    if (m == "variance") return variance_degree();
    if (m == "ls") return ls_degree();
    if (m == "e") return e_degree(q.alpha, q.beta);
    if (m == "i") return i_degree(q.alpha, q.beta);
    if (m == "s") return s_degree();
    if (m == "cfs") return cfs_degree(q.alpha, q.beta);
    if (m == "w2") return w2_degree(q.alpha, q.beta);
    if (m == "clmc") return clmc_degree(q.alpha, q.beta);
  } else {
    if (m == "ccr") return ccr_param(q.n, q.beta);
    if (m == "fisher") return f_param(q.n, q.beta);
    if (m == "variance") return variance_param(q.n, q.beta);
    if (m == "cfs") return cfs_param(q.n, q.beta);
    if (m == "np") return np_param(q.n, q.beta, q.p);
    if (m == "e") return e_param(q.n, q.beta);
    if (m == "i") return i_param(q.n, q.beta);
    if (m == "s") return s_param();
    if (m == "ls") return ls_param();
    if (m == "w2") return w2_param(q.n, q.beta, q.variant);
    if (m == "clmc") return clmc_param(q.n, q.beta, q.variant);
  }
  throw DomainError("prediction_for: no " + std::string(to_string(q.regime)) + "-regime law for measure '" + m + "'");
}

}  // namespace jcx
