#ifndef BKFLOW_SCATTERING_BOUND_STATES_HPP
#define BKFLOW_SCATTERING_BOUND_STATES_HPP

#include <vector>

#include "bkflow/numeric/tridiagonal.hpp"
#include "bkflow/scattering/potential.hpp"

namespace bkflow {

/// Dirichlet box truncation of B = A + V on sites -L..L (dimension 2L+1).
SymTridiagonal box_operator(const LatticePotential& pot, int L);

/// Free box (zero potential), same convention.
SymTridiagonal free_box_operator(int L);

struct BoundState {
  double value = 0.0;  // refined on the doubled box
  bool stable = true;  // moved by <= 1e-6 under L -> 2L
};

/// Discrete spectrum outside the band: eigenvalues of the box truncation
/// clearing the band edges by margin = 10/L. Each value is re-computed on
/// the doubled box; movement beyond 1e-6 marks a near-band-edge resonance.
/// Requires L >= 10 * (support diameter + 1).
std::vector<BoundState> bound_states(const LatticePotential& pot, int L);

}  // namespace bkflow

#endif
