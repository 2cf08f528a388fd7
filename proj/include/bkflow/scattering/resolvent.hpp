#ifndef BKFLOW_SCATTERING_RESOLVENT_HPP
#define BKFLOW_SCATTERING_RESOLVENT_HPP

#include <complex>

namespace bkflow {

/// Kernel of (A - lambda - i eps)^{-1} for the lattice hopping operator A.
/// Closed form: exp(i kappa |n-m|) / (2 i sin kappa) with kappa the root of
/// 2 cos kappa = lambda + i eps in the upper half plane, so that the kernel
/// decays in |n-m| for eps > 0. For eps = 0 the boundary value at
/// lambda + i0 is taken; band-edge lambda with eps = 0 is rejected.
std::complex<double> free_resolvent_kernel(double lambda, double eps, int n, int m);

}  // namespace bkflow

#endif
