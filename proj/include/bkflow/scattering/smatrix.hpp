#ifndef BKFLOW_SCATTERING_SMATRIX_HPP
#define BKFLOW_SCATTERING_SMATRIX_HPP

#include <array>

#include "bkflow/numeric/matrix.hpp"
#include "bkflow/scattering/band.hpp"
#include "bkflow/scattering/potential.hpp"

namespace bkflow {

/// One-site transfer step [[lambda - v(n), -1], [1, 0]] composed over the
/// support hull; maps (u(n), u(n-1)) to (u(n+1), u(n)). Determinant 1.
struct Transfer2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
  double det() const { return m00 * m11 - m01 * m10; }
};

Transfer2 transfer_matrix(const LatticePotential& pot, double lambda);

/// Channel convention for the 2x2 fiber: component 0 carries the amplitude
/// of the plane wave e^{+ikn}, component 1 of e^{-ikn}. With the dispersion
/// lambda = 2 cos k the wave e^{-ikn} has positive group velocity, so the
/// left-incident scattering solution is e^{-ikn} + r_- e^{+ikn}.
/// S = [[t, r_+], [r_-, t]] with common transmission t.
ComplexMatrix s_matrix_transfer(const LatticePotential& pot, double lambda,
                                double band_margin = kBandEdgeMargin);

/// Stationary route: S = I - 2 pi i w^2 * [e^{-iakn}] T [e^{ibkm}] with the
/// finite T-matrix (I + V R_0(lambda + i0))^{-1} V over the support.
ComplexMatrix s_matrix_stationary(const LatticePotential& pot, double lambda,
                                  double band_margin = kBandEdgeMargin);

/// Fiber normalization w(lambda) = (4 pi sin k)^{-1/2} making the
/// plane-wave diagonalization of A unitary onto L^2(dlambda, C^2).
double fiber_weight(double lambda);

/// Smoothness kernel: Z(lambda)[+-][j] = w(lambda) e^{-+ik site_j} |v_j|^{1/2},
/// a 2 x m matrix over the support. Rejects lambda within band_margin of a
/// band edge (w diverges there).
ComplexMatrix smooth_kernel_Z(const LatticePotential& pot, double lambda,
                              double band_margin = kBandEdgeMargin);

/// Scattering data at one energy: S from the transfer route, eigenphases,
/// smoothness kernel and alpha = ||S - I|| / 2.
struct ScatteringPoint {
  double lambda = 0.0;
  double k = 0.0;
  ComplexMatrix s;               // 2x2 unitary
  Complex t, r_plus, r_minus;    // t = S(1,1), r_+ = S(0,1), r_- = S(1,0)
  std::array<double, 2> eigenphases{};  // ascending in [0, 2pi)
  ComplexMatrix z;               // 2 x m
  double alpha = 0.0;
};

ScatteringPoint s_matrix(const LatticePotential& pot, double lambda,
                         double band_margin = kBandEdgeMargin);

/// alpha(lambda) = ||S(lambda) - I|| / 2 for a precomputed S.
double alpha_of(const ComplexMatrix& s);

}  // namespace bkflow

#endif
