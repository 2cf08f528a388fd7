#ifndef BKFLOW_NUMERIC_HERMITIAN_HPP
#define BKFLOW_NUMERIC_HERMITIAN_HPP

#include <vector>

#include "bkflow/numeric/matrix.hpp"

namespace bkflow {

/// Dense complex self-adjoint matrix. Construction validates conjugate
/// symmetry to 1e-12 relative deviation and rejects otherwise, naming the
/// worst entry pair; the stored matrix is the symmetrized (A + A*)/2.
class HermitianMatrix {
public:
  explicit HermitianMatrix(const ComplexMatrix& m, double rel_tol = 1e-12);

  static HermitianMatrix diagonal(const std::vector<double>& d);
  static HermitianMatrix from_real_symmetric(const RealMatrix& m);

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  Complex at(std::size_t i, std::size_t j) const { return mat_.at(i, j); }

  /// True when every entry has zero imaginary part.
  bool is_real() const;

private:
  ComplexMatrix mat_;
};

}  // namespace bkflow

#endif
