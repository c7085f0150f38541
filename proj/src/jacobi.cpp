#include "jcx/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jcx/errors.hpp"
#include "jcx/specfun.hpp"
#include "jcx/tridiagonal.hpp"

namespace jcx {
namespace {

constexpr double kRescaleAbove = 1e100;

void require_unit_interval(double x, const char* what) {
  if (!(std::fabs(x) <= 1.0)) {
    throw DomainError(std::string(what) + ": x must lie in [-1, 1], got " + std::to_string(x));
  }
}

double checked_value(const ScaledReal& v, const char* what) {
  const double out = v.value();
  if (!std::isfinite(out)) throw OverflowError(std::string(what) + ": value exceeds the double range");
  return out;
}

}  // namespace

PolyParams::PolyParams(int degree, double alpha, double beta)
    : degree_(degree), alpha_(alpha), beta_(beta) {
  if (degree < 0) throw DomainError("PolyParams: degree must be non-negative");
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("PolyParams: alpha and beta must be finite and > -1");
  }
}

double ScaledReal::log_abs() const {
  if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::fabs(mantissa)) + log_scale;
}

double ScaledReal::value() const {
  if (mantissa == 0.0) return 0.0;
  return sign() * std::exp(log_abs());
}

RecurrenceCoefficients jacobi_recurrence(double a, double b, int m) {
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("jacobi_recurrence: exponents must be > -1");
  RecurrenceCoefficients rc;
  if (m <= 0) return rc;
  rc.diagonal.resize(static_cast<std::size_t>(m));
  rc.offdiagonal.resize(static_cast<std::size_t>(m - 1));
  const double s = a + b;
  const double diff = b - a;
  // k = 0 has a removable 0/0 when a + b = 0.
  rc.diagonal[0] = diff / (s + 2.0);
  for (int k = 1; k < m; ++k) {
    const double t = 2.0 * k + s;
    rc.diagonal[static_cast<std::size_t>(k)] = diff * (b + a) / (t * (t + 2.0));
  }
  for (int k = 1; k < m; ++k) {
    const double t = 2.0 * k + s;
    double sq;
    if (k == 1) {
      // (k + s) / (2k + s - 1) = 1 at k = 1; avoids 0/0 when a + b = -1.
      sq = 4.0 * (1.0 + a) * (1.0 + b) / ((t * t) * (t + 1.0));
    } else {
      sq = 4.0 * k * (k + a) * (k + b) * (k + s) / ((t * t) * (t + 1.0) * (t - 1.0));
    }
    rc.offdiagonal[static_cast<std::size_t>(k - 1)] = std::sqrt(sq);
  }
  return rc;
}

double log_weight_moment0(double a, double b) { return log_beta_doubled(a + 1.0, b + 1.0); }

double log_weight(double a, double b, double one_minus_x, double one_plus_x) {
  double out = 0.0;
  if (a != 0.0) out += a * std::log(one_minus_x);
  if (b != 0.0) out += b * std::log(one_plus_x);
  return out;
}

double log_norm_constant(const PolyParams& params) {
  const int n = params.degree();
  const double a = params.alpha();
  const double b = params.beta();
  if (n == 0) return log_weight_moment0(a, b);
  const double nn = n;
  const double s = a + b;
  const double log_tail = -std::log(2.0 * nn + s + 1.0);
  if (std::min(a, b) > nn) {
    // Gamma(n+a+1) Gamma(n+b+1) = B(n+a+1, n+b+1) Gamma(2n+s+2): large a and b stay out of the logs.
    return log_beta_doubled(nn + a + 1.0, nn + b + 1.0) - 2.0 * nn * std::numbers::ln2 +
           log_gamma_ratio(2.0 * nn + s + 2.0, nn + s + 1.0) - log_gamma(nn + 1.0) + log_tail;
  }
  // Pair the Gamma functions so each ratio differs by the smaller exponent.
  const double small = std::min(a, b);
  const double large = std::max(a, b);
  return (s + 1.0) * std::numbers::ln2 + log_gamma_ratio(nn + small + 1.0, nn + 1.0) +
         log_gamma_ratio(nn + large + 1.0, nn + s + 1.0) + log_tail;
}

double norm_constant(const PolyParams& params) {
  const double v = std::exp(log_norm_constant(params));
  if (!std::isfinite(v)) throw OverflowError("norm_constant: kappa_n exceeds the double range");
  return v;
}

ScaledReal classical_scaled(const PolyParams& params, double x) {
  const int n = params.degree();
  const double a = params.alpha();
  const double b = params.beta();
  if (n == 0) return {1.0, 0.0};
  const double s = a + b;
  double prev = 1.0;
  double cur = 0.5 * (s + 2.0) * x + 0.5 * (a - b);
  double log_scale = 0.0;
  const double a2b2 = a * a - b * b;
  for (int k = 2; k <= n; ++k) {
    const double t = 2.0 * k + s;
    const double c0 = 2.0 * k * (k + s) * (t - 2.0);
    const double c1 = (t - 1.0) * (t * (t - 2.0) * x + a2b2);
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * t;
    const double next = (c1 * cur - c2 * prev) / c0;
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kRescaleAbove) {
      const double scale = std::fabs(cur);
      cur /= scale;
      prev /= scale;
      log_scale += std::log(scale);
    }
  }
  return {cur, log_scale};
}

ScaledReal orthonormal_scaled(const PolyParams& params, double x) {
  ScaledReal v = classical_scaled(params, x);
  v.log_scale -= 0.5 * log_norm_constant(params);
  return v;
}

ScaledReal derivative_scaled(const PolyParams& params, double x) {
  const int n = params.degree();
  if (n == 0) return {0.0, 0.0};
  const double a = params.alpha();
  const double b = params.beta();
  ScaledReal v = classical_scaled(PolyParams(n - 1, a + 1.0, b + 1.0), x);
  v.log_scale += std::log(0.5 * (n + a + b + 1.0));
  return v;
}

ScaledReal orthonormal_derivative_scaled(const PolyParams& params, double x) {
  ScaledReal v = derivative_scaled(params, x);
  v.log_scale -= 0.5 * log_norm_constant(params);
  return v;
}

double eval_classical(const PolyParams& params, double x) {
  require_unit_interval(x, "eval_classical");
  return checked_value(classical_scaled(params, x), "eval_classical");
}

double eval_orthonormal(const PolyParams& params, double x) {
  require_unit_interval(x, "eval_orthonormal");
  return checked_value(orthonormal_scaled(params, x), "eval_orthonormal");
}

double eval_derivative(const PolyParams& params, double x) {
  if (!std::isfinite(x)) throw DomainError("eval_derivative: x must be finite");
  return checked_value(derivative_scaled(params, x), "eval_derivative");
}

std::vector<double> zeros(const PolyParams& params) {
  const int n = params.degree();
  if (n == 0) return {};
  const RecurrenceCoefficients rc = jacobi_recurrence(params.alpha(), params.beta(), n);
  std::vector<double> roots = symmetric_tridiagonal_eigenvalues(rc.diagonal, rc.offdiagonal);

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double x = roots[i];
    const ScaledReal p = classical_scaled(params, x);
    const ScaledReal dp = derivative_scaled(params, x);
    if (p.mantissa == 0.0 || dp.mantissa == 0.0) continue;
    const double step = p.mantissa / dp.mantissa * std::exp(p.log_scale - dp.log_scale);
    const double lo = i > 0 ? roots[i - 1] : -1.0;
    const double hi = i + 1 < roots.size() ? roots[i + 1] : 1.0;
    const double candidate = x - step;
    // One Newton step; only taken if it stays inside the bracket and shrinks the residual.
    if (!(candidate > lo && candidate < hi)) continue;
    if (classical_scaled(params, candidate).log_abs() < p.log_abs()) roots[i] = candidate;
  }
  return roots;
}

double log_rakhmanov_density(const PolyParams& params, double x, double one_minus_x,
                             double one_plus_x) {
  const ScaledReal p = orthonormal_scaled(params, x);
  return 2.0 * p.log_abs() + log_weight(params.alpha(), params.beta(), one_minus_x, one_plus_x);
}

double rakhmanov_density(const PolyParams& params, double x) {
  require_unit_interval(x, "rakhmanov_density");
  if ((x == 1.0 && params.alpha() < 0.0) || (x == -1.0 && params.beta() < 0.0)) {
    throw DomainError("rakhmanov_density: density is singular at this endpoint");
  }
  return std::exp(log_rakhmanov_density(params, x, 1.0 - x, 1.0 + x));
}

}  // namespace jcx
