#ifndef BKFLOW_SSF_TRACE_FORMULA_HPP
#define BKFLOW_SSF_TRACE_FORMULA_HPP

#include "bkflow/numeric/hermitian.hpp"
#include "bkflow/ssf/test_functions.hpp"

namespace bkflow {

/// Residual of the trace formula Tr(phi(B) - phi(A)) = integral of
/// phi'(t) * xi(t) dt, with xi the exact step function N_A - N_B.
///
/// The left side is evaluated through the eigendecompositions of A and B.
/// The integral is evaluated twice: exactly, by telescoping phi over the
/// step locations, and independently by composite Simpson quadrature of
/// phi' on each constancy interval of xi. The returned residual is the
/// larger of the two route defects.
///
/// Requires phi's support to cover both spectra and quadrature_points of at
/// least 1000.
double trace_formula_residual(const HermitianMatrix& a, const HermitianMatrix& b,
                              const TestFunction& phi, int quadrature_points = 2000);

}  // namespace bkflow

#endif
