#ifndef JCX_JACOBI_HPP_
#define JCX_JACOBI_HPP_

#include <vector>

namespace jcx {

/// Degree n and weight exponents (alpha, beta) of one Jacobi polynomial;
/// the weight is (1 - x)^alpha (1 + x)^beta on [-1, 1].
class PolyParams {
 public:
  /// Throws DomainError unless n >= 0 and alpha, beta > -1.
  PolyParams(int degree, double alpha, double beta);

  int degree() const noexcept { return degree_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Same degree with the exponents exchanged (the x -> -x mirror image).
  PolyParams reflected() const { return PolyParams(degree_, beta_, alpha_); }
  PolyParams with_degree(int degree) const { return PolyParams(degree, alpha_, beta_); }

  friend bool operator==(const PolyParams&, const PolyParams&) = default;

 private:
  int degree_;
  double alpha_;
  double beta_;
};

/// mantissa * exp(log_scale). Lets recurrences run past the double range.
struct ScaledReal {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double log_abs() const;
  int sign() const noexcept { return (mantissa > 0.0) - (mantissa < 0.0); }
  /// The plain double; may be +-inf or 0 when out of range.
  double value() const;
};

/// Three-term recurrence of the orthonormal polynomials for weight
/// (1 - x)^a (1 + x)^b:  x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}.
/// `diagonal` holds a_0..a_{m-1}, `offdiagonal` holds b_1..b_{m-1}.
struct RecurrenceCoefficients {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;
};

RecurrenceCoefficients jacobi_recurrence(double a, double b, int m);

/// ln of the zeroth moment 2^(a+b+1) B(a+1, b+1) of the weight.
double log_weight_moment0(double a, double b);

/// ln h(x) = a ln(1 - x) + b ln(1 + x), from the two complements.
/// A zero exponent contributes nothing, even at the endpoint.
double log_weight(double a, double b, double one_minus_x, double one_plus_x);

/// ln kappa_n, the squared weighted L2 norm of the classical polynomial.
double log_norm_constant(const PolyParams& params);
/// kappa_n itself; OverflowError when it is not representable.
double norm_constant(const PolyParams& params);

/// P_n(x) via the classical recurrence, rescaled whenever an iterate exceeds 1e100.
ScaledReal classical_scaled(const PolyParams& params, double x);
/// Orthonormal value P_n(x) / sqrt(kappa_n), division done on the log scale.
ScaledReal orthonormal_scaled(const PolyParams& params, double x);
/// d/dx P_n(x) = (n + alpha + beta + 1)/2 * P_{n-1}^{(alpha+1, beta+1)}(x).
ScaledReal derivative_scaled(const PolyParams& params, double x);
/// d/dx of the orthonormal polynomial.
ScaledReal orthonormal_derivative_scaled(const PolyParams& params, double x);

/// P_n(x) for |x| <= 1. OverflowError when the value leaves the double range.
double eval_classical(const PolyParams& params, double x);
double eval_orthonormal(const PolyParams& params, double x);
double eval_derivative(const PolyParams& params, double x);

/// The n zeros, strictly increasing, from the eigenvalues of the n x n Jacobi
/// matrix followed by one Newton step on the classical polynomial.
std::vector<double> zeros(const PolyParams& params);

/// ln rho_n at a point given by its complements 1 - x and 1 + x; -inf where rho_n = 0.
double log_rakhmanov_density(const PolyParams& params, double x, double one_minus_x,
                             double one_plus_x);

/// rho_n(x) = [P_n(x)]^2 (1 - x)^alpha (1 + x)^beta / kappa_n.
/// DomainError at an endpoint whose exponent is negative, or for |x| > 1.
double rakhmanov_density(const PolyParams& params, double x);

}  // namespace jcx

#endif  // JCX_JACOBI_HPP_
