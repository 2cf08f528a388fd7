#include "bkflow/ssf/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "bkflow/numeric/eigensolver.hpp"

namespace bkflow {

CountingFunction::CountingFunction(std::vector<double> ascending) : ev_(std::move(ascending)) {
  if (ev_.empty()) throw std::invalid_argument("CountingFunction: empty spectrum");
  if (!std::is_sorted(ev_.begin(), ev_.end()))
    throw std::invalid_argument("CountingFunction: eigenvalues must be ascending");
}

CountingFunction CountingFunction::of(const HermitianMatrix& m) {
  return CountingFunction(eigvalsh(m));
}

int CountingFunction::operator()(double lambda, double gap_tol) const {
  return eigenvalue_count_below(ev_, lambda, gap_tol);
}

int counting(const HermitianMatrix& m, double lambda, double gap_tol) {
  return CountingFunction::of(m)(lambda, gap_tol);
}

long ssf_finite(const HermitianMatrix& a, const HermitianMatrix& b, double lambda,
                double gap_tol) {
  const int na = counting(a, lambda, gap_tol);
  const int nb = counting(b, lambda, gap_tol);
  return static_cast<long>(na) - static_cast<long>(nb);
}

}  // namespace bkflow
