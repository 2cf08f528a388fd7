#include "bkflow/numeric/tridiagonal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bkflow/numeric/detail/tql.hpp"

namespace bkflow {

SymTridiagonal::SymTridiagonal(std::vector<double> diag, std::vector<double> off)
    : d_(std::move(diag)), e_(std::move(off)) {
  if (d_.empty()) throw std::invalid_argument("SymTridiagonal: empty diagonal");
  if (e_.size() != d_.size() - 1)
    throw std::invalid_argument("SymTridiagonal: off-diagonal must have length n-1");
}

std::vector<double> SymTridiagonal::eigenvalues() const {
  std::vector<double> d = d_;
  std::vector<double> e = e_;
  detail::tql_implicit(d, e, detail::NoRotation{});
  std::sort(d.begin(), d.end());
  return d;
}

RealEigenDecomposition SymTridiagonal::eigensystem() const {
  const std::size_t n = d_.size();
  std::vector<double> d = d_;
  std::vector<double> e = e_;
  RealMatrix z = RealMatrix::identity(n);
  detail::tql_implicit(d, e, [&z, n](std::size_t i, double c, double s) {
    double* zi = z.col(i);
    double* zi1 = z.col(i + 1);
    for (std::size_t k = 0; k < n; ++k) {
      const double f = zi1[k];
      zi1[k] = s * zi[k] + c * f;
      zi[k] = c * zi[k] - s * f;
    }
  });
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  RealEigenDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = d[order[j]];
    const double* src = z.col(order[j]);
    double* dst = out.vectors.col(j);
    std::copy(src, src + n, dst);
  }
  return out;
}

}  // namespace bkflow
