#ifndef BKFLOW_NUMERIC_DETAIL_TQL_HPP
#define BKFLOW_NUMERIC_DETAIL_TQL_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bkflow::detail {

// Implicitly shifted QL iteration on a symmetric tridiagonal (d, e), where
// e[i] couples entries i and i+1. Eigenvalues are left in d, unsorted.
// Every Givens rotation is streamed to rotate(i, c, s); the accumulated
// transform Z must be updated column-wise as
//   f = Z(:,i+1); Z(:,i+1) = s*Z(:,i) + c*f; Z(:,i) = c*Z(:,i) - s*f.
template <class RotateFn>
void tql_implicit(std::vector<double>& d, std::vector<double>& e, RotateFn&& rotate) {
  const int n = static_cast<int>(d.size());
  if (static_cast<int>(e.size()) != (n > 0 ? n - 1 : 0))
    throw std::invalid_argument("tql: off-diagonal length must be n-1");
  if (n <= 1) return;
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tql: no convergence after 60 sweeps");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          rotate(static_cast<std::size_t>(i), c, s);
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

struct NoRotation {
  void operator()(std::size_t, double, double) const {}
};

}  // namespace bkflow::detail

#endif
