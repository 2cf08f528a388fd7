#include "bkflow/scattering/resolvent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bkflow/scattering/band.hpp"

namespace bkflow {

std::complex<double> free_resolvent_kernel(double lambda, double eps, int n, int m) {
  if (!(lambda > -2.0 && lambda < 2.0)) {
    std::ostringstream msg;
    msg << "free_resolvent_kernel: lambda = " << lambda << " outside open band (-2,2)";
    throw std::invalid_argument(msg.str());
  }
  if (eps < 0.0) throw std::invalid_argument("free_resolvent_kernel: eps must be >= 0");
  const int dist = std::abs(n - m);
  if (eps == 0.0) {
    if (2.0 - std::abs(lambda) < 1e-12)
      throw std::invalid_argument(
          "free_resolvent_kernel: band-edge lambda with eps = 0 rejected");
    const double k = momentum(lambda);
    // kappa -> -k as eps -> 0+, so sin kappa -> -sin k.
    const std::complex<double> phase(std::cos(k * dist), -std::sin(k * dist));
    return phase / std::complex<double>(0.0, -2.0 * std::sin(k));
  }
  const std::complex<double> z(lambda, eps);
  const std::complex<double> kappa = -std::acos(z / 2.0);  // Im kappa > 0 branch
  const std::complex<double> i_unit(0.0, 1.0);
  return std::exp(i_unit * kappa * static_cast<double>(dist)) /
         (2.0 * i_unit * std::sin(kappa));
}

}  // namespace bkflow
