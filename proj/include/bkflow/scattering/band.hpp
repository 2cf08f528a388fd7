#ifndef BKFLOW_SCATTERING_BAND_HPP
#define BKFLOW_SCATTERING_BAND_HPP

#include <cstddef>
#include <vector>

namespace bkflow {

/// Default exclusion margin at the band edges +-2 for the public band
/// operations; the fiber normalization degrades like |sin k|^{-1/2} there.
inline constexpr double kBandEdgeMargin = 1e-3;

/// Momentum k in (0, pi) with lambda = 2 cos k. Rejects lambda outside the
/// open band (-2, 2).
double momentum(double lambda);

/// Compact interval [a, b] strictly inside the band, with a sampling grid.
struct BandInterval {
  double a;
  double b;
  std::vector<double> grid;  // strictly increasing

  BandInterval(double a, double b, std::size_t points);
};

}  // namespace bkflow

#endif
