#ifndef BKFLOW_SSF_COUNTING_HPP
#define BKFLOW_SSF_COUNTING_HPP

#include <vector>

#include "bkflow/numeric/hermitian.hpp"

namespace bkflow {

/// Eigenvalue counting function N(lambda) = #{eigenvalues < lambda} of one
/// operator, kept as its sorted spectrum.
class CountingFunction {
public:
  explicit CountingFunction(std::vector<double> ascending_eigenvalues);
  static CountingFunction of(const HermitianMatrix& m);

  /// Rejects lambda within gap_tol of an eigenvalue.
  int operator()(double lambda, double gap_tol = 1e-9) const;

  const std::vector<double>& eigenvalues() const { return ev_; }
  double min_eigenvalue() const { return ev_.front(); }
  double max_eigenvalue() const { return ev_.back(); }

private:
  std::vector<double> ev_;
};

/// N_M(lambda) computed through the spectrum of M.
int counting(const HermitianMatrix& m, double lambda, double gap_tol = 1e-9);

/// Finite-dimensional spectral shift N_A(lambda) - N_B(lambda); rejects
/// lambda on either spectrum.
long ssf_finite(const HermitianMatrix& a, const HermitianMatrix& b, double lambda,
                double gap_tol = 1e-9);

}  // namespace bkflow

#endif
