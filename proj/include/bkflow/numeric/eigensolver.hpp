#ifndef BKFLOW_NUMERIC_EIGENSOLVER_HPP
#define BKFLOW_NUMERIC_EIGENSOLVER_HPP

#include <vector>

#include "bkflow/numeric/hermitian.hpp"
#include "bkflow/numeric/matrix.hpp"
#include "bkflow/numeric/tridiagonal.hpp"

namespace bkflow {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // orthonormal columns, vectors.col(j) <-> eigenvalues[j]

  /// Largest of the invariant defects: reconstruction residual relative to
  /// max(1, ||M||) and deviation of the vector matrix from unitarity.
  double validate(const HermitianMatrix& m) const;
};

/// Hermitian eigendecomposition: Householder tridiagonalization followed by
/// implicitly shifted QL. Deterministic: identical input gives bitwise
/// identical output.
EigenDecomposition eigh(const HermitianMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> eigvalsh(const HermitianMatrix& m);

/// Dense real symmetric path (same algorithm in real arithmetic); used by
/// the finite-volume machinery where matrices are real and large.
RealEigenDecomposition eigh_real(const RealMatrix& sym);
std::vector<double> eigvalsh_real(const RealMatrix& sym);

/// Eigenphases of a unitary matrix, sorted ascending in [0, 2*pi), one entry
/// per eigenvalue (multiplicities appear as repeats). Rejects input whose
/// unitarity defect ||U*U - I|| exceeds unitarity_tol, reporting the defect.
std::vector<double> eig_unitary(const ComplexMatrix& u, double unitarity_tol = 1e-8);

/// Operator norm (largest singular value).
double spectral_norm(const ComplexMatrix& m);

/// Orthogonal projection onto the spectral subspace of (-inf, lambda).
/// Rejects lambda within gap_tol of an eigenvalue.
HermitianMatrix spectral_projection(const HermitianMatrix& m, double lambda,
                                    double gap_tol = 1e-9);

/// #{eigenvalues < lambda} with the same gap-tolerance rejection.
int eigenvalue_count_below(const std::vector<double>& ascending_eigenvalues, double lambda,
                           double gap_tol = 1e-9);

}  // namespace bkflow

#endif
