#include "jcx/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jcx/errors.hpp"
#include "jcx/specfun.hpp"

namespace jcx {
namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

double fisher_alpha_zero(double n, double beta) {
  return (2.0 * n + beta + 1.0) / 4.0 *
         (n * n / (beta + 1.0) + n + (4.0 * n + 1.0) * (n + beta + 1.0) +
          (n + 1.0) * (n + 1.0) / (beta - 1.0));
}

double fisher_interior(double n, double a, double b) {
  const double s = a + b;
  const double lower = n * (n + s - 1.0) * ((n + a) / (b + 1.0) + 2.0 + (n + b) / (a + 1.0));
  const double upper = (n + 1.0) * (n + s) * ((n + a) / (b - 1.0) + 2.0 + (n + b) / (a - 1.0));
  return (2.0 * n + s + 1.0) / (4.0 * (n + s - 1.0)) * (lower + upper);
}

bool is_even_integer(double p) { return p == 2.0 * std::floor(p / 2.0); }

}  // namespace

double ExtendedReal::value() const {
  if (infinite_) throw DomainError("ExtendedReal: value requested from the infinity marker");
  return value_;
}

FisherClass fisher_class(double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0) return FisherClass::Legendre;
  if (alpha == 0.0 && beta > 1.0) return FisherClass::AlphaZero;
  if (beta == 0.0 && alpha > 1.0) return FisherClass::BetaZero;
  if (alpha > 1.0 && beta > 1.0) return FisherClass::Interior;
  return FisherClass::Infinite;
}

const char* to_string(FisherClass cls) {
  switch (cls) {
    case FisherClass::Legendre: return "alpha=beta=0";
    case FisherClass::AlphaZero: return "alpha=0, beta>1";
    case FisherClass::BetaZero: return "beta=0, alpha>1";
    case FisherClass::Interior: return "alpha>1, beta>1";
    case FisherClass::Infinite: return "infinite";
  }
  return "unknown";
}

double default_tolerance(int degree) { return degree <= 50 ? 1e-10 : 1e-8; }

double variance(const PolyParams& params) {
  const double n = params.degree();
  const double a = params.alpha();
  const double b = params.beta();
  const double s = a + b;
  const double t = 2.0 * n + s;
  // (n + s + 1) / (t + 1) and (n + s) / (t - 1) have removable 0/0 points at
  // n = 0 (s = -1) and n = 1 (s = -1); both ratios are 1 there.
  const double upper_ratio = params.degree() == 0 ? 1.0 : (n + s + 1.0) / (t + 1.0);
  const double upper =
      4.0 * (n + 1.0) * (n + a + 1.0) * (n + b + 1.0) * upper_ratio / ((t + 2.0) * (t + 2.0) * (t + 3.0));
  if (params.degree() == 0) return upper;
  const double lower_ratio = params.degree() == 1 ? 1.0 : (n + s) / (t - 1.0);
  const double lower = 4.0 * n * (n + a) * (n + b) * lower_ratio / (t * t * (t + 1.0));
  return upper + lower;
}

double variance_by_quadrature(const PolyParams& params) {
  const QuadRule rule = gauss_jacobi_rule(params.alpha(), params.beta(), params.degree() + 2);
  std::vector<double> mass(rule.nodes.size());
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double lp = orthonormal_scaled(params, rule.nodes[i]).log_abs();
    mass[i] = std::exp(rule.log_moment0 + std::log(rule.unit_weights[i]) + 2.0 * lp);
    total += mass[i];
  }
  double mean = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) mean += mass[i] * rule.nodes[i];
  mean /= total;
  double centred = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    const double d = rule.nodes[i] - mean;
    centred += mass[i] * d * d;
  }
  return centred / total;
}

ExtendedReal fisher_info(const PolyParams& params) {
  const double n = params.degree();
  switch (fisher_class(params.alpha(), params.beta())) {
    case FisherClass::Legendre: return 2.0 * n * (n + 1.0) * (2.0 * n + 1.0);
    case FisherClass::AlphaZero: return fisher_alpha_zero(n, params.beta());
    case FisherClass::BetaZero: return fisher_alpha_zero(n, params.alpha());
    case FisherClass::Interior: return fisher_interior(n, params.alpha(), params.beta());
    case FisherClass::Infinite: break;
  }
  return ExtendedReal::infinity();
}

IntegralResult fisher_info_numeric(const PolyParams& params, double tol,
                                   const IntegrationOptions& options) {
  if (fisher_class(params.alpha(), params.beta()) == FisherClass::Infinite) {
    throw DomainError("fisher_info_numeric: Fisher information is infinite for these parameters");
  }
  const double a = params.alpha();
  const double b = params.beta();
  auto integrand = [&](const Abscissa& pt) {
    const double log_h = log_weight(a, b, pt.one_minus_x, pt.one_plus_x);
    if (log_h == -std::numeric_limits<double>::infinity()) return 0.0;
    const ScaledReal p = orthonormal_scaled(params, pt.x);
    const ScaledReal dp = orthonormal_derivative_scaled(params, pt.x);
    double log_derivative = 0.0;
    if (a != 0.0) log_derivative -= a / pt.one_minus_x;
    if (b != 0.0) log_derivative += b / pt.one_plus_x;
    const double inner = 2.0 * dp.mantissa * std::exp(dp.log_scale - p.log_scale) + p.mantissa * log_derivative;
    return std::exp(log_h + 2.0 * p.log_scale) * inner * inner;
  };
  return integrate_log_singular(params, PointIntegrand(integrand), tol, options);
}

double shannon_I(const PolyParams& params) {
  const double n = params.degree();
  const double a = params.alpha();
  const double b = params.beta();
  const double s = a + b;
  double bracket;
  if (params.degree() == 0) {
    // 1/(s+1) + psi(s+1) = psi(s+2), valid also for s + 1 <= 0.
    bracket = digamma(s + 2.0) - std::numbers::ln2;
  } else {
    bracket = 1.0 / (2.0 * n + s + 1.0) + 2.0 * digamma(2.0 * n + s + 1.0) - digamma(n + s + 1.0) -
              std::numbers::ln2;
  }
  const double first = s == 0.0 ? 0.0 : s * bracket;
  const double second = (a == 0.0 ? 0.0 : a * digamma(n + a + 1.0)) + (b == 0.0 ? 0.0 : b * digamma(n + b + 1.0));
  return first - second;
}

IntegralResult shannon_I_numeric(const PolyParams& params, double tol,
                                 const IntegrationOptions& options) {
  auto integrand = [&](const Abscissa& pt) {
    const double log_h = log_weight(params.alpha(), params.beta(), pt.one_minus_x, pt.one_plus_x);
    const double log_rho = 2.0 * orthonormal_scaled(params, pt.x).log_abs() + log_h;
    if (log_rho == -std::numeric_limits<double>::infinity()) return 0.0;
    return -std::exp(log_rho) * log_h;
  };
  return integrate_log_singular(params, PointIntegrand(integrand), tol, options);
}

IntegralResult shannon_E_numeric(const PolyParams& params, double tol,
                                 const IntegrationOptions& options) {
  auto integrand = [&](const Abscissa& pt) {
    const double log_p = orthonormal_scaled(params, pt.x).log_abs();
    const double log_rho = 2.0 * log_p + log_weight(params.alpha(), params.beta(), pt.one_minus_x, pt.one_plus_x);
    if (log_rho == -std::numeric_limits<double>::infinity()) return 0.0;
    return -std::exp(log_rho) * 2.0 * log_p;
  };
  return integrate_log_singular(params, PointIntegrand(integrand), tol, options);
}

IntegralResult shannon_entropy_direct(const PolyParams& params, double tol,
                                      const IntegrationOptions& options) {
  auto integrand = [&](const Abscissa& pt) {
    const double log_rho = log_rakhmanov_density(params, pt.x, pt.one_minus_x, pt.one_plus_x);
    if (log_rho == -std::numeric_limits<double>::infinity()) return 0.0;
    return -std::exp(log_rho) * log_rho;
  };
  return integrate_log_singular(params, PointIntegrand(integrand), tol, options);
}

IntegralResult shannon_entropy(const PolyParams& params, double tol, const IntegrationOptions& options,
                               bool verify) {
  IntegralResult s = shannon_E_numeric(params, tol, options);
  s.value += shannon_I(params);
  if (verify) {
    const IntegralResult direct = shannon_entropy_direct(params, tol, options);
    const double allowed = s.abs_error_estimate + direct.abs_error_estimate + 10.0 * tol;
    if (std::fabs(direct.value - s.value) > allowed) {
      throw std::runtime_error("shannon_entropy: E + I = " + std::to_string(s.value) +
                               " disagrees with -int rho ln rho = " + std::to_string(direct.value));
    }
    s.evaluations += direct.evaluations;
  }
  return s;
}

IntegralResult spreading_length(const PolyParams& params, double tol, const IntegrationOptions& options) {
  IntegralResult s = shannon_entropy(params, tol, options);
  s.value = std::exp(s.value);
  s.abs_error_estimate *= s.value;
  return s;
}

double log_lq_norm(const PolyParams& params, double p, double tol, const IntegrationOptions& options) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("lq_norm: order p must be positive");
  const double a = params.alpha();
  const double b = params.beta();
  if (is_even_integer(p)) {
    const int m = static_cast<int>(params.degree() * p / 2.0) + 1;
    const QuadRule rule = gauss_jacobi_rule(a, b, m);
    std::vector<double> log_values(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      log_values[i] = p * classical_scaled(params, rule.nodes[i]).log_abs();
    }
    return log_integrate_weighted(rule, log_values);
  }
  // |P|^p h = exp(shift) * (h / mu0) |P / sqrt(kappa / mu0)|^p keeps the integrand O(1).
  const double log_kappa = log_norm_constant(params);
  const double log_mu0 = log_weight_moment0(a, b);
  const double shift = 0.5 * p * log_kappa + (1.0 - 0.5 * p) * log_mu0;
  auto integrand = [&](const Abscissa& pt) {
    const ScaledReal v = classical_scaled(params, pt.x);
    if (v.mantissa == 0.0) return 0.0;
    const double log_q = v.log_abs() - 0.5 * log_kappa + 0.5 * log_mu0;
    return std::exp(log_weight(a, b, pt.one_minus_x, pt.one_plus_x) - log_mu0 + p * log_q);
  };
  const IntegralResult r = integrate_log_singular(params, PointIntegrand(integrand), tol, options);
  return shift + std::log(r.value);
}

double lq_norm(const PolyParams& params, double p, double tol, const IntegrationOptions& options) {
  const double v = std::exp(log_lq_norm(params, p, tol, options));
  if (!std::isfinite(v)) throw OverflowError("lq_norm: N_p exceeds the double range");
  return v;
}

NormDerivativeEntropy shannon_E_via_norm_derivative(const PolyParams& params, double step, double tol,
                                                    const IntegrationOptions& options) {
  if (!(step >= 1e-5 && step <= 1e-2)) throw DomainError("shannon_E_via_norm_derivative: step must lie in [1e-5, 1e-2]");
  const double kappa = norm_constant(params);
  const double upper = lq_norm(params, 2.0 + step, tol, options);
  const double lower = lq_norm(params, 2.0 - step, tol, options);
  // dN/dp at p = 2 is int h P^2 ln|P| = -E[P] / 2.
  const double classical = -2.0 * (upper - lower) / (2.0 * step);
  return {classical, classical / kappa + std::log(kappa)};
}

double disequilibrium_w2(const PolyParams& params) {
  const double a2 = 2.0 * params.alpha();
  const double b2 = 2.0 * params.beta();
  if (!(a2 > -1.0) || !(b2 > -1.0)) {
    throw UnsupportedClassError("disequilibrium_w2: int rho^2 diverges for 2 alpha <= -1 or 2 beta <= -1",
                                "2*alpha > -1 and 2*beta > -1");
  }
  const QuadRule rule = gauss_jacobi_rule(a2, b2, 2 * params.degree() + 1);
  std::vector<double> log_values(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    log_values[i] = 4.0 * orthonormal_scaled(params, rule.nodes[i]).log_abs();
  }
  return std::exp(log_integrate_weighted(rule, log_values));
}

IntegralResult disequilibrium_w2_numeric(const PolyParams& params, double tol,
                                         const IntegrationOptions& options) {
  auto integrand = [&](const Abscissa& pt) {
    return std::exp(2.0 * log_rakhmanov_density(params, pt.x, pt.one_minus_x, pt.one_plus_x));
  };
  return integrate_log_singular(params, PointIntegrand(integrand), tol, options);
}

ExtendedReal cramer_rao(const PolyParams& params) { return fisher_info(params) * variance(params); }

ExtendedReal fisher_shannon(const PolyParams& params, double tol, const IntegrationOptions& options) {
  const ExtendedReal f = fisher_info(params);
  if (f.is_infinite()) return f;
  const double ls = spreading_length(params, tol, options).value;
  return f * (ls * ls / kTwoPiE);
}

double lmc(const PolyParams& params, double tol, const IntegrationOptions& options) {
  return disequilibrium_w2(params) * spreading_length(params, tol, options).value;
}

MeasureSet compute_measures(const PolyParams& params, const MeasureOptions& options) {
  const double tol = options.tol.value_or(default_tolerance(params.degree()));
  MeasureSet m;
  m.params = params;
  m.variance = variance(params);
  m.fisher = fisher_info(params);

  const IntegralResult e = shannon_E_numeric(params, tol, options.integration);
  m.shannon_E = e.value;
  m.shannon_I = shannon_I(params);
  m.shannon_S = m.shannon_E + m.shannon_I;
  m.spreading_length = std::exp(m.shannon_S);
  if (options.verify_entropy) {
    const IntegralResult direct = shannon_entropy_direct(params, tol, options.integration);
    if (std::fabs(direct.value - m.shannon_S) > e.abs_error_estimate + direct.abs_error_estimate + 10.0 * tol) {
      throw std::runtime_error("compute_measures: E + I disagrees with -int rho ln rho");
    }
  }

  try {
    m.w2 = disequilibrium_w2(params);
  } catch (const UnsupportedClassError&) {
    m.w2.reset();
  }
  for (double p : options.lq_orders) m.log_lq_norms[p] = log_lq_norm(params, p, 1e-12, options.integration);

  const double ls = m.spreading_length;
  m.c_cr = m.fisher * m.variance;
  m.c_fs = m.fisher * (ls * ls / kTwoPiE);
  if (m.w2) m.c_lmc = *m.w2 * ls;

  m.errors["shannon_E"] = e.abs_error_estimate;
  m.errors["shannon_S"] = e.abs_error_estimate;
  m.errors["spreading_length"] = ls * e.abs_error_estimate;
  if (!m.fisher.is_infinite()) m.errors["c_fs"] = m.fisher.value() * ls * ls / kTwoPiE * 2.0 * e.abs_error_estimate;
  if (m.c_lmc) m.errors["c_lmc"] = *m.c_lmc * e.abs_error_estimate;
  return m;
}

}  // namespace jcx
