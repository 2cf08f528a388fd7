#ifndef BKFLOW_SPECFLOW_FLOW_HPP
#define BKFLOW_SPECFLOW_FLOW_HPP

#include <optional>
#include <vector>

#include "bkflow/numeric/matrix.hpp"
#include "bkflow/specflow/family.hpp"

namespace bkflow {

/// Signed eigenphase count of a unitary between two angles of (0, 2pi):
/// #{phases in [theta1, theta2)} for theta1 < theta2, antisymmetric under
/// swapping. Rejects when a phase sits within phase_tol of an endpoint.
int counting_between(const ComplexMatrix& u, double theta1, double theta2,
                     double phase_tol = 1e-8);

/// Same on a precomputed sorted phase multiset.
int counting_phases(const std::vector<double>& phases, double theta1, double theta2,
                    double phase_tol = 1e-8);

struct GapAngle {
  bool found = false;
  double theta0 = 0.0;
  double arc_width = 0.0;
};

/// Midpoint of the largest arc of (0, 2pi) whose delta_step-fattening
/// contains no eigenphase of any node in [first, last]; not found when the
/// largest such arc is narrower than 3 * delta_step.
GapAngle find_gap_angle(const UnitaryFamily& fam, std::size_t first, std::size_t last,
                        double delta_step);

struct FlowSubinterval {
  std::size_t first_node = 0;
  std::size_t last_node = 0;
  double theta0 = 0.0;
};

struct CrossingEvent {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  int direction = 0;  // +1 anticlockwise, -1 clockwise
};

struct FlowResult {
  double theta = 0.0;
  long flow = 0;
  std::vector<FlowSubinterval> partition;
  std::vector<CrossingEvent> crossings;
  double delta_step_used = 0.0;
};

/// Spectral flow of the family through e^{i theta}: the family is refined,
/// [a, b] is partitioned greedily into maximal subintervals admitting a gap
/// angle, the two-point counting difference is taken on each and summed.
/// Rejects when an endpoint node carries an eigenphase at theta.
FlowResult spectral_flow(UnitaryFamily& fam, double theta, double delta_step = 1e-2,
                         std::size_t node_budget = std::size_t{1} << 16,
                         double phase_tol = 1e-8);

/// Flow evaluated over an explicit partition given by node indices (must
/// start at 0 and end at the last node). Each piece must admit a gap angle.
/// Used to exercise partition independence.
long flow_with_partition(const UnitaryFamily& fam, double theta,
                         const std::vector<std::size_t>& cuts, double delta_step,
                         double phase_tol = 1e-8);

}  // namespace bkflow

#endif
