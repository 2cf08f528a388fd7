#ifndef BKFLOW_SPECFLOW_FAMILY_HPP
#define BKFLOW_SPECFLOW_FAMILY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "bkflow/numeric/matrix.hpp"

namespace bkflow {

/// Distance on the unit circle between two angles.
double circle_distance(double theta1, double theta2);

/// Symmetric Hausdorff distance on the circle between two phase multisets.
double circle_hausdorff(const std::vector<double>& a, const std::vector<double>& b);

struct FamilyNode {
  double lambda = 0.0;
  std::vector<double> phases;  // sorted ascending in [0, 2pi), repeats = multiplicity
};

/// Sampled family of unitary matrices over [a, b]: a refinable grid of
/// eigenphase multisets. Refinement bisects until adjacent nodes move by at
/// most delta_step in circle-Hausdorff distance.
class UnitaryFamily {
public:
  using Sampler = std::function<ComplexMatrix(double)>;

  UnitaryFamily(Sampler sampler, double a, double b, std::size_t initial_nodes = 17);

  /// Frozen family without a callback (deserialized data); refine is
  /// unavailable.
  static UnitaryFamily from_nodes(std::vector<FamilyNode> nodes);

  double a() const { return nodes_.front().lambda; }
  double b() const { return nodes_.back().lambda; }
  std::size_t node_count() const { return nodes_.size(); }
  const FamilyNode& node(std::size_t i) const { return nodes_[i]; }
  bool refinable() const { return static_cast<bool>(sampler_); }

  /// Largest adjacent-node circle-Hausdorff distance.
  double max_adjacent_step() const;

  /// Bisects intervals until every adjacent pair moves by at most delta_step
  /// or the node budget is exhausted (failure names the worst subinterval).
  void refine(double delta_step, std::size_t node_budget = std::size_t{1} << 16);

private:
  UnitaryFamily() = default;
  FamilyNode make_node(double lambda) const;

  Sampler sampler_;
  std::vector<FamilyNode> nodes_;
};

}  // namespace bkflow

#endif
