#ifndef JCX_ASYMPTOTICS_HPP_
#define JCX_ASYMPTOTICS_HPP_

#include <functional>
#include <string>

namespace jcx {

enum class Regime { Degree, Alpha };

enum class GrowthLaw {
  Constant,
  NCubed,
  LogN,
  NPowMinus2Beta,
  Alpha,
  AlphaSquared,
  InverseAlpha,
  InverseAlphaSquared,
  LogAlpha,
  Composite,
};

const char* to_string(Regime regime);
const char* to_string(GrowthLaw law);

/// Leading-order behaviour of one measure in one regime. The sweep variable x
/// is n in the degree regime and alpha in the parameter regime.
struct AsymptoticPrediction {
  Regime regime = Regime::Degree;
  std::string measure;
  GrowthLaw law = GrowthLaw::Constant;
  /// Limit value for Constant, coefficient of the growth law otherwise.
  double coefficient = 0.0;
  /// Power of n for NPowMinus2Beta (that is, -2 beta).
  double exponent = 0.0;
  std::string applicability;
  /// Set when the prediction is more than coefficient * law(x).
  std::function<double(double)> value_fn;
  /// Same, for predictors that only fit in a double on the log scale.
  std::function<double(double)> log_value_fn;

  double evaluate(double x) const;
  double log_evaluate(double x) const;
};

// Degree regime, fixed (alpha, beta). The finite-Fisher classes are
// alpha = beta = 0; alpha = 0, beta > 1 (and its mirror); alpha, beta > 1.

AsymptoticPrediction ccr_degree(double alpha, double beta);
AsymptoticPrediction fisher_degree(double alpha, double beta);
AsymptoticPrediction variance_degree();
AsymptoticPrediction ls_degree();
AsymptoticPrediction e_degree(double alpha, double beta);
AsymptoticPrediction i_degree(double alpha, double beta);
AsymptoticPrediction s_degree();
AsymptoticPrediction cfs_degree(double alpha, double beta);
/// beta > 0 (needs alpha > 0 for Gamma(alpha)): constant; beta = 0: log n;
/// -1 < beta < 0: n^{-2 beta}.
AsymptoticPrediction w2_degree(double alpha, double beta);
AsymptoticPrediction clmc_degree(double alpha, double beta);

// Parameter regime, fixed (n, beta), alpha -> infinity.

enum class W2Variant { Paper, DerivedCorrection };
const char* to_string(W2Variant variant);

AsymptoticPrediction ccr_param(int n, double beta);
/// V alpha^2 -> 4[(n+1)(n+beta+1) + n(n+beta)].
AsymptoticPrediction variance_param(int n, double beta);
AsymptoticPrediction f_param(int n, double beta);
AsymptoticPrediction cfs_param(int n, double beta);
/// alpha -> Gamma(alpha+n+1)/n! Gamma(1+np+beta)/Gamma(2+alpha+np+beta) 2^{1+alpha+beta}.
AsymptoticPrediction np_param(int n, double beta, double p);
AsymptoticPrediction e_param(int n, double beta);
AsymptoticPrediction i_param(int n, double beta);
AsymptoticPrediction s_param();
AsymptoticPrediction ls_param();
/// C(n, beta) = ln 2 + ln(Gamma(1+n+beta)/n!) + 1 + 2n + beta - beta psi(1+n+beta),
/// the O(1) term of S + ln alpha obtained by adding the E and I expansions.
double s_param_constant(int n, double beta);
AsymptoticPrediction w2_param(int n, double beta, W2Variant variant = W2Variant::Paper);
AsymptoticPrediction clmc_param(int n, double beta, W2Variant variant = W2Variant::Paper);

/// Names accepted by `prediction_for`: ccr, fisher, variance, e, i, s, ls, cfs, w2, clmc, np.
struct PredictionQuery {
  Regime regime = Regime::Degree;
  std::string measure;
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double p = 2.0;
  W2Variant variant = W2Variant::Paper;
};

/// DomainError for an unknown measure name or one without a law in the regime.
AsymptoticPrediction prediction_for(const PredictionQuery& query);

}  // namespace jcx

#endif  // JCX_ASYMPTOTICS_HPP_
