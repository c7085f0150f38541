#ifndef JCX_MEASURES_HPP_
#define JCX_MEASURES_HPP_

#include <map>
#include <optional>
#include <string>

#include "jcx/jacobi.hpp"
#include "jcx/quadrature.hpp"

namespace jcx {

/// A non-negative measure that may be infinite by definition (not by overflow).
class ExtendedReal {
 public:
  constexpr ExtendedReal(double v) : value_(v), infinite_(false) {}  // NOLINT(implicit)
  static constexpr ExtendedReal infinity() { return ExtendedReal(); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// DomainError on the infinity marker.
  double value() const;

  friend ExtendedReal operator*(const ExtendedReal& lhs, double rhs) {
    return lhs.infinite_ ? infinity() : ExtendedReal(lhs.value_ * rhs);
  }
  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  constexpr ExtendedReal() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// Parameter classes of the Fisher information closed form. The mirror class
/// (beta = 0, alpha > 1) is served through the reflection (alpha, beta) -> (beta, alpha).
enum class FisherClass { Legendre, AlphaZero, BetaZero, Interior, Infinite };
FisherClass fisher_class(double alpha, double beta);
const char* to_string(FisherClass cls);

/// 1e-10 up to degree 50, 1e-8 above.
double default_tolerance(int degree);

/// Closed-form variance of the Rakhmanov density.
double variance(const PolyParams& params);
/// Centred second moment from an exact Gauss-Jacobi rule; independent check of `variance`.
double variance_by_quadrature(const PolyParams& params);

/// Closed-form Fisher information, or the infinity marker outside the finite classes.
ExtendedReal fisher_info(const PolyParams& params);

/// Integral of [rho']^2 / rho written as h (2 p' + p h'/h)^2, with p the
/// orthonormal polynomial. That form is finite at the zeros of p, where it
/// equals the quadratic-vanishing limit 4 h p'^2. DomainError for parameters
/// whose Fisher information is infinite.
IntegralResult fisher_info_numeric(const PolyParams& params, double tol,
                                   const IntegrationOptions& options = {});

/// I = -int rho ln h, closed form in digamma values.
double shannon_I(const PolyParams& params);
IntegralResult shannon_I_numeric(const PolyParams& params, double tol,
                                 const IntegrationOptions& options = {});

/// E = -int rho ln p^2 with p the orthonormal polynomial.
IntegralResult shannon_E_numeric(const PolyParams& params, double tol,
                                 const IntegrationOptions& options = {});

/// S = E + I (E numeric, I closed form). With `verify`, S is also computed as
/// -int rho ln rho directly and a mismatch beyond the combined error throws.
IntegralResult shannon_entropy(const PolyParams& params, double tol,
                               const IntegrationOptions& options = {}, bool verify = false);
IntegralResult shannon_entropy_direct(const PolyParams& params, double tol,
                                      const IntegrationOptions& options = {});
/// L_S = exp(S); the error estimate is propagated to first order.
IntegralResult spreading_length(const PolyParams& params, double tol,
                                const IntegrationOptions& options = {});

/// N_p = int h |P_n|^p for the classical polynomial. Even integer p uses an
/// exact Gauss-Jacobi rule; other p use the cell integrator.
double log_lq_norm(const PolyParams& params, double p, double tol = 1e-12,
                   const IntegrationOptions& options = {});
double lq_norm(const PolyParams& params, double p, double tol = 1e-12,
               const IntegrationOptions& options = {});

struct NormDerivativeEntropy {
  double classical;    ///< E[P_n] = -int h P_n^2 ln P_n^2 = -dN_p/dp at p = 2
  double orthonormal;  ///< E[P_n] / kappa_n + ln kappa_n
};

/// E through a central difference of N_p around p = 2 with step `step`
/// in [1e-5, 1e-2]. Needs kappa_n to be representable.
NormDerivativeEntropy shannon_E_via_norm_derivative(const PolyParams& params, double step,
                                                    double tol = 1e-12,
                                                    const IntegrationOptions& options = {});

/// W2 = int rho^2, exact with a Gauss-Jacobi(2 alpha, 2 beta) rule of 2n + 1
/// nodes. UnsupportedClassError when 2 alpha <= -1 or 2 beta <= -1.
double disequilibrium_w2(const PolyParams& params);
IntegralResult disequilibrium_w2_numeric(const PolyParams& params, double tol,
                                         const IntegrationOptions& options = {});

ExtendedReal cramer_rao(const PolyParams& params);
ExtendedReal fisher_shannon(const PolyParams& params, double tol,
                            const IntegrationOptions& options = {});
double lmc(const PolyParams& params, double tol, const IntegrationOptions& options = {});

struct MeasureOptions {
  std::optional<double> tol;  ///< defaults to default_tolerance(n)
  IntegrationOptions integration;
  std::vector<double> lq_orders{1.0, 2.0, 4.0};
  bool verify_entropy = false;
};

/// Every spreading and complexity measure of one polynomial.
struct MeasureSet {
  PolyParams params{0, 0.0, 0.0};
  double variance = 0.0;
  ExtendedReal fisher{0.0};
  double shannon_E = 0.0;
  double shannon_I = 0.0;
  double shannon_S = 0.0;
  double spreading_length = 0.0;
  std::optional<double> w2;  ///< empty when 2 alpha or 2 beta <= -1
  std::map<double, double> log_lq_norms;
  ExtendedReal c_cr{0.0};
  ExtendedReal c_fs{0.0};
  std::optional<double> c_lmc;
  /// Absolute error estimates of the numerically computed fields, by field name.
  std::map<std::string, double> errors;
};

MeasureSet compute_measures(const PolyParams& params, const MeasureOptions& options = {});

}  // namespace jcx

#endif  // JCX_MEASURES_HPP_
