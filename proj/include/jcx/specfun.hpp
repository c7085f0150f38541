#ifndef JCX_SPECFUN_HPP_
#define JCX_SPECFUN_HPP_

namespace jcx {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// ln Gamma(x) for x > 0.
///
/// Uses a (zeta - 1) power series around x = 1 for x in (0, 2.5] and a
/// shifted Stirling series above, so the result stays relatively accurate
/// near the roots at x = 1 and x = 2.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0 (asymptotic series after shifting x >= 10).
double digamma(double x);

/// ln Gamma(x) - ln Gamma(y) without forming the two large logarithms separately.
double log_gamma_ratio(double x, double y);

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// (a + b - 1) ln 2 + ln B(a, b), accurate when a and b are both large.
double log_beta_doubled(double a, double b);

/// ln (x)_k = ln Gamma(x + k) - ln Gamma(x) for x > 0, x + k > 0.
double log_pochhammer(double x, double k);

/// Upper bound on the number of series terms summed by hyp2f1_at_neg1.
inline constexpr int kHyp2f1TermCap = 4000;

/// 2F1(1, b; c; -1).
///
/// Terminating series when b is a non-positive integer; otherwise the Pfaff
/// transform 2F1(1, b; c; -1) = 1/2 2F1(1, c - b; c; 1/2), which converges
/// geometrically. Throws DomainError when the defining series diverges
/// (c - b <= 0 with b not a non-positive integer) or c hits a pole.
double hyp2f1_at_neg1(double b, double c);

}  // namespace jcx

#endif  // JCX_SPECFUN_HPP_
