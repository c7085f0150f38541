#ifndef JCX_QUADRATURE_HPP_
#define JCX_QUADRATURE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "jcx/jacobi.hpp"

namespace jcx {

inline constexpr int kMaxRuleOrder = 4096;

/// m-point Gauss-Jacobi rule for the weight (1 - x)^a (1 + x)^b.
///
/// Weights are held as `unit_weights` (summing to one) plus the log of the
/// zeroth moment, so rules for very large exponents stay representable.
struct QuadRule {
  double exp_a = 0.0;
  double exp_b = 0.0;
  std::vector<double> nodes;
  std::vector<double> unit_weights;
  double log_moment0 = 0.0;

  int order() const noexcept { return static_cast<int>(nodes.size()); }
  /// Absolute weights; OverflowError if the zeroth moment is not representable.
  std::vector<double> weights() const;
};

/// Nodes from the eigenvalues of the Jacobi matrix (Golub-Welsch) with one
/// Newton polish; weights from the first eigenvector components written in
/// closed form, w_i = 1 / sum_{k<m} p_k(x_i)^2, which keeps small endpoint
/// weights relatively accurate.
QuadRule gauss_jacobi_rule(double a, double b, int m);

/// sum_i w_i f(x_i) in ascending node order with compensated summation.
/// EvaluationError carrying the node if f is not finite there.
double integrate_weighted(const QuadRule& rule, const std::function<double(double)>& f);

/// ln sum_i w_i exp(log_values[i]), for integrands only known on the log scale.
double log_integrate_weighted(const QuadRule& rule, std::span<const double> log_values);

struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

/// A quadrature abscissa together with its distances to +1 and -1, which
/// are exact near the outer endpoints even when x itself rounds to +-1.
struct Abscissa {
  double x;
  double one_minus_x;
  double one_plus_x;
};

using PointIntegrand = std::function<double(const Abscissa&)>;

inline constexpr int kTanhSinhMaxLevel = 12;
inline constexpr std::int64_t kDefaultMaxEvaluations = 50'000'000;

struct IntegrationOptions {
  int max_level = kTanhSinhMaxLevel;
  std::int64_t max_evaluations = kDefaultMaxEvaluations;
};

/// Tanh-sinh quadrature over each cell [breaks[i], breaks[i+1]], summed in
/// ascending cell order. Each cell gets the share tol * width / 2 of the
/// tolerance. BudgetError (with the best estimate) when a cell reaches the
/// level cap or the evaluation budget runs out.
IntegralResult integrate_cells(std::span<const double> breaks, const PointIntegrand& g, double tol,
                               const IntegrationOptions& options = {});

/// Integral over [-1, 1] of an integrand with logarithmic singularities at
/// the zeros of the given polynomial and algebraic ones at +-1; cells are
/// delimited by {-1} U zeros U {+1}.
IntegralResult integrate_log_singular(const PolyParams& params, const PointIntegrand& g,
                                      double tol, const IntegrationOptions& options = {});
IntegralResult integrate_log_singular(const PolyParams& params,
                                      const std::function<double(double)>& g, double tol,
                                      const IntegrationOptions& options = {});

}  // namespace jcx

#endif  // JCX_QUADRATURE_HPP_
