#ifndef BKFLOW_PROJECTIONS_PROJECTION_PAIR_HPP
#define BKFLOW_PROJECTIONS_PROJECTION_PAIR_HPP

#include <vector>

#include "bkflow/numeric/eigensolver.hpp"
#include "bkflow/numeric/hermitian.hpp"

namespace bkflow {

/// Two orthogonal projections with the spectrum of their difference.
/// sigma(P-Q) lies in [-1,1] and, away from {-1,0,1}, is symmetric about 0
/// with matching multiplicities.
class ProjectionPair {
public:
  ProjectionPair(const HermitianMatrix& p, const HermitianMatrix& q, double proj_tol = 1e-8);

  std::size_t dim() const { return p_.dim(); }
  const HermitianMatrix& p() const { return p_; }
  const HermitianMatrix& q() const { return q_; }

  /// Eigenvalues of P - Q, ascending.
  const std::vector<double>& difference_spectrum() const { return spectrum_; }

  /// True when every eigenvalue mu with tau < |mu| < 1 - tau is matched by
  /// -mu with equal multiplicity (clusters formed at tolerance tau).
  bool sign_symmetric(double tau = 1e-8) const;

private:
  HermitianMatrix p_;
  HermitianMatrix q_;
  std::vector<double> spectrum_;
};

struct IndexResult {
  long index = 0;
  int dim_ker_plus = 0;   // multiplicity at +1
  int dim_ker_minus = 0;  // multiplicity at -1
  double gap_to_one = 0;  // distance from the rest of the spectrum to {+1,-1}
};

/// Validates P, Q and assembles the pair. Rejects non-projections with the
/// idempotency defect.
ProjectionPair pair_spectrum(const HermitianMatrix& p, const HermitianMatrix& q,
                             double proj_tol = 1e-8);

/// index(P,Q) = dim Ker(P-Q-I) - dim Ker(P-Q+I), counted inside absolute
/// windows of width eig_tol at +1 and -1. Requires a clean separation band:
/// no eigenvalue in [1-2t, 1-t) or (-1+t, -1+2t].
IndexResult fredholm_index(const ProjectionPair& pair, double eig_tol = 1e-6);
IndexResult fredholm_index(const HermitianMatrix& p, const HermitianMatrix& q,
                           double eig_tol = 1e-6);

/// |Tr(P-Q) - index(P,Q)|; at most 1e-8 for any valid finite pair.
double trace_identity_check(const HermitianMatrix& p, const HermitianMatrix& q,
                            double eig_tol = 1e-6);

/// Index of the pair of spectral projections of A and B below lambda.
/// Finite dimension: equals N_A(lambda) - N_B(lambda).
long xi_finite(const HermitianMatrix& a, const HermitianMatrix& b, double lambda,
               double gap_tol = 1e-9);

}  // namespace bkflow

#endif
