#include "jcx/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jcx/errors.hpp"

namespace jcx {

std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diag,
                                                      std::span<const double> offdiag) {
  const std::size_t m = diag.size();
  if (m == 0) return {};
  if (offdiag.size() + 1 != m) throw DomainError("tridiagonal: off-diagonal must have size m - 1");

  std::vector<double> d(diag.begin(), diag.end());
  // e[i] couples rows i and i + 1; e[m - 1] is a zero sentinel.
  std::vector<double> e(m, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());

  constexpr int kMaxSweeps = 60;
  const double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < m; ++l) {
    int sweeps = 0;
    while (true) {
      // Find the first negligible coupling at or after l.
      std::size_t split = l;
      for (; split + 1 < m; ++split) {
        const double scale = std::fabs(d[split]) + std::fabs(d[split + 1]);
        if (std::fabs(e[split]) <= eps * scale) break;
      }
      if (split == l) break;
      if (++sweeps > kMaxSweeps) throw DomainError("tridiagonal: QL iteration did not converge");

      // Shift from the leading 2x2 block, then chase the bulge from split back to l.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[split] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (std::size_t i = split; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[split] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[split] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace jcx
