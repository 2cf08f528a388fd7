#include "bkflow/numeric/hermitian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bkflow {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double rel_tol) {
  if (!m.is_square()) throw std::invalid_argument("HermitianMatrix: matrix must be square");
  const std::size_t n = m.rows();
  const double scale = std::max(m.max_abs(), 1.0);
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const double dev = std::abs(m.at(i, j) - std::conj(m.at(j, i)));
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > rel_tol * scale) {
    std::ostringstream msg;
    msg << "HermitianMatrix: not conjugate-symmetric; worst entry pair (" << wi << "," << wj
        << "): a[i][j]=(" << m.at(wi, wj).real() << "," << m.at(wi, wj).imag()
        << ") vs conj(a[j][i])=(" << std::conj(m.at(wj, wi)).real() << ","
        << std::conj(m.at(wj, wi)).imag() << "), deviation " << worst << " exceeds " << rel_tol
        << " * scale " << scale;
    throw std::invalid_argument(msg.str());
  }
  mat_ = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      mat_.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = Complex(d[i], 0.0);
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::from_real_symmetric(const RealMatrix& m) {
  return HermitianMatrix(ComplexMatrix::from_real(m));
}

bool HermitianMatrix::is_real() const {
  for (std::size_t j = 0; j < mat_.cols(); ++j)
    for (std::size_t i = 0; i < mat_.rows(); ++i)
      if (mat_.at(i, j).imag() != 0.0) return false;
  return true;
}

}  // namespace bkflow
