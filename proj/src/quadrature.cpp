#include "jcx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jcx/errors.hpp"

namespace jcx {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// 1 / sum_{k<m} q_k(x)^2 with q_k = p_k / p_0 from the orthonormal recurrence.
double christoffel_unit_weight(const RecurrenceCoefficients& rc, double x) {
  const std::size_t m = rc.diagonal.size();
  double prev = 0.0;
  double cur = 1.0;
  double sum = 1.0;
  double log_factor = 0.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double bk = k > 0 ? rc.offdiagonal[k - 1] : 0.0;
    const double next = ((x - rc.diagonal[k]) * cur - bk * prev) / rc.offdiagonal[k];
    prev = cur;
    cur = next;
    sum += cur * cur;
    if (std::fabs(cur) > 1e100) {
      prev *= 1e-100;
      cur *= 1e-100;
      sum *= 1e-200;
      log_factor += 200.0 * std::numbers::ln10;
    }
  }
  return std::exp(-(std::log(sum) + log_factor));
}

constexpr double kTanhSinhHalfRange = 6.0;

struct Budget {
  std::int64_t used = 0;
  std::int64_t limit;
};

struct CellResult {
  double value;
  double error;
  double roundoff;
};

CellResult tanh_sinh_cell(double lo, double hi, const PointIntegrand& g, double tol,
                          const IntegrationOptions& options, Budget& budget, double done_so_far) {
  const double half = 0.5 * (hi - lo);
  const bool lower_is_edge = lo == -1.0;
  const bool upper_is_edge = hi == 1.0;

  CompensatedSum sum;
  CompensatedSum abs_sum;

  auto eval_at = [&](double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::fabs(u));
    const double near = half * 2.0 * e / (1.0 + e);  // distance to the closer endpoint
    const double far = 2.0 * half - near;
    if (near <= 0.0) return;
    const double dl = t < 0.0 ? near : far;
    const double dr = t < 0.0 ? far : near;
    const double x = t < 0.0 ? lo + dl : hi - dr;
    const double w = half * 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    if (w == 0.0) return;
    const Abscissa point{x, upper_is_edge ? dr : 1.0 - x, lower_is_edge ? dl : 1.0 + x};
    const double v = g(point);
    ++budget.used;
    if (!std::isfinite(v)) throw EvaluationError("integrand is not finite", x);
    sum.add(w * v);
    abs_sum.add(std::fabs(w * v));
  };

  // Level 0: t in {-T, 0, T}; level l adds the odd multiples of T / 2^l.
  eval_at(0.0);
  eval_at(-kTanhSinhHalfRange);
  eval_at(kTanhSinhHalfRange);
  double step = kTanhSinhHalfRange;
  double estimate = step * sum.value();
  double previous = estimate;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= options.max_level; ++level) {
    step *= 0.5;
    const int count = 1 << level;  // odd multiples k * step for k = 1, 3, ..., 2^l - 1
    for (int k = 1; k < count; k += 2) {
      eval_at(-k * step);
      eval_at(k * step);
    }
    if (budget.used > budget.limit) {
      throw BudgetError("evaluation budget exhausted", done_so_far + step * sum.value(),
                        std::fabs(step * sum.value() - previous));
    }
    previous = estimate;
    estimate = step * sum.value();
    error = std::fabs(estimate - previous);
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * step * abs_sum.value();
    if (level >= 3 && (error <= tol || error <= roundoff)) return {estimate, error, roundoff};
  }
  throw BudgetError("tanh-sinh level cap reached without convergence", done_so_far + estimate, error);
}

}  // namespace

std::vector<double> QuadRule::weights() const {
  const double scale = std::exp(log_moment0);
  if (!std::isfinite(scale)) throw OverflowError("QuadRule::weights: zeroth moment exceeds the double range");
  std::vector<double> out(unit_weights.size());
  std::transform(unit_weights.begin(), unit_weights.end(), out.begin(),
                 [scale](double u) { return u * scale; });
  return out;
}

QuadRule gauss_jacobi_rule(double a, double b, int m) {
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi_rule: exponents must be > -1");
  if (m < 1 || m > kMaxRuleOrder) {
    throw DomainError("gauss_jacobi_rule: order must be in [1, " + std::to_string(kMaxRuleOrder) + "]");
  }
  QuadRule rule;
  rule.exp_a = a;
  rule.exp_b = b;
  rule.log_moment0 = log_weight_moment0(a, b);
  rule.nodes = zeros(PolyParams(m, a, b));
  const RecurrenceCoefficients rc = jacobi_recurrence(a, b, m);
  rule.unit_weights.reserve(rule.nodes.size());
  for (double x : rule.nodes) rule.unit_weights.push_back(christoffel_unit_weight(rc, x));
  return rule;
}

double integrate_weighted(const QuadRule& rule, const std::function<double(double)>& f) {
  const std::vector<double> w = rule.weights();
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrate_weighted: integrand not finite at node " + std::to_string(i),
                            rule.nodes[i]);
    }
    sum.add(w[i] * v);
  }
  return sum.value();
}

double log_integrate_weighted(const QuadRule& rule, std::span<const double> log_values) {
  if (log_values.size() != rule.nodes.size()) throw DomainError("log_integrate_weighted: size mismatch");
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_values.size(); ++i) {
    peak = std::max(peak, log_values[i] + std::log(rule.unit_weights[i]));
  }
  if (!std::isfinite(peak)) return peak;
  CompensatedSum sum;
  for (std::size_t i = 0; i < log_values.size(); ++i) {
    sum.add(std::exp(log_values[i] + std::log(rule.unit_weights[i]) - peak));
  }
  return rule.log_moment0 + peak + std::log(sum.value());
}

IntegralResult integrate_cells(std::span<const double> breaks, const PointIntegrand& g, double tol,
                               const IntegrationOptions& options) {
  if (!(tol > 0.0)) throw DomainError("integrate_cells: tolerance must be positive");
  if (breaks.size() < 2) throw DomainError("integrate_cells: need at least two breakpoints");
  Budget budget{0, options.max_evaluations};
  CompensatedSum total;
  double error = 0.0;
  double roundoff = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    if (!(hi > lo)) continue;  // coincident breakpoints collapse into one boundary
    const double cell_tol = tol * 0.5 * (hi - lo);
    const CellResult cell = tanh_sinh_cell(lo, hi, g, cell_tol, options, budget, total.value());
    total.add(cell.value);
    error += cell.error;
    roundoff += cell.roundoff;
  }
  if (error > tol && error > roundoff) {
    throw BudgetError("integrate_cells: error estimate exceeds tolerance", total.value(), error);
  }
  return {total.value(), error, budget.used};
}

IntegralResult integrate_log_singular(const PolyParams& params, const PointIntegrand& g, double tol,
                                      const IntegrationOptions& options) {
  std::vector<double> breaks;
  breaks.reserve(static_cast<std::size_t>(params.degree()) + 2);
  breaks.push_back(-1.0);
  for (double z : zeros(params)) breaks.push_back(z);
  breaks.push_back(1.0);
  return integrate_cells(breaks, g, tol, options);
}

IntegralResult integrate_log_singular(const PolyParams& params,
                                      const std::function<double(double)>& g, double tol,
                                      const IntegrationOptions& options) {
  return integrate_log_singular(
      params, PointIntegrand([&g](const Abscissa& p) { return g(p.x); }), tol, options);
}

}  // namespace jcx
