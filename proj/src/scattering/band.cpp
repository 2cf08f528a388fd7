#include "bkflow/scattering/band.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bkflow {

double momentum(double lambda) {
  if (!(lambda > -2.0 && lambda < 2.0)) {
    std::ostringstream msg;
    msg << "momentum: lambda = " << lambda << " outside open band (-2,2)";
    throw std::invalid_argument(msg.str());
  }
  return std::acos(lambda / 2.0);
}

BandInterval::BandInterval(double a_in, double b_in, std::size_t points) : a(a_in), b(b_in) {
  if (!(a > -2.0 && b < 2.0 && a < b)) {
    std::ostringstream msg;
    msg << "BandInterval: [" << a << ", " << b << "] is not compactly inside (-2, 2)";
    throw std::invalid_argument(msg.str());
  }
  if (points < 2) throw std::invalid_argument("BandInterval: need at least two grid points");
  grid.resize(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
}

}  // namespace bkflow
