#ifndef JCX_TRIDIAGONAL_HPP_
#define JCX_TRIDIAGONAL_HPP_

#include <span>
#include <vector>

namespace jcx {

/// Eigenvalues of the symmetric tridiagonal matrix with main diagonal `diag`
/// (size m) and sub-diagonal `offdiag` (size m - 1), sorted ascending.
///
/// Implicit QL iteration with Wilkinson-type shifts; eigenvalues only.
std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diag,
                                                      std::span<const double> offdiag);

}  // namespace jcx

#endif  // JCX_TRIDIAGONAL_HPP_
