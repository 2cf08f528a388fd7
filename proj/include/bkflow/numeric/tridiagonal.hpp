#ifndef BKFLOW_NUMERIC_TRIDIAGONAL_HPP
#define BKFLOW_NUMERIC_TRIDIAGONAL_HPP

#include <vector>

#include "bkflow/numeric/matrix.hpp"

namespace bkflow {

struct RealEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  RealMatrix vectors;               // orthonormal columns
};

/// Real symmetric tridiagonal matrix: diagonal d (n), off-diagonal e (n-1).
/// Finite-box lattice Schrodinger operators live here, so the eigenvalue-only
/// path is O(n^2) and vectors cost O(n^3) rotations with no reduction step.
class SymTridiagonal {
public:
  SymTridiagonal(std::vector<double> diag, std::vector<double> off);

  std::size_t dim() const { return d_.size(); }
  const std::vector<double>& diag() const { return d_; }
  const std::vector<double>& off() const { return e_; }

  std::vector<double> eigenvalues() const;        // ascending
  RealEigenDecomposition eigensystem() const;     // ascending, with vectors

private:
  std::vector<double> d_;
  std::vector<double> e_;
};

}  // namespace bkflow

#endif
