#include "bkflow/specflow/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bkflow/numeric/eigensolver.hpp"

namespace bkflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double circle_distance(double theta1, double theta2) {
  double d = std::fmod(std::abs(theta1 - theta2), kTwoPi);
  if (d > kTwoPi / 2.0) d = kTwoPi - d;
  return d;
}

double circle_hausdorff(const std::vector<double>& a, const std::vector<double>& b) {
  const auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double t : from) {
      double best = kTwoPi;
      for (double u : to) best = std::min(best, circle_distance(t, u));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

UnitaryFamily::UnitaryFamily(Sampler sampler, double a, double b, std::size_t initial_nodes)
    : sampler_(std::move(sampler)) {
  if (!(a < b)) throw std::invalid_argument("UnitaryFamily: need a < b");
  if (initial_nodes < 2) initial_nodes = 2;
  nodes_.reserve(initial_nodes);
  for (std::size_t i = 0; i < initial_nodes; ++i) {
    const double lambda =
        a + (b - a) * static_cast<double>(i) / static_cast<double>(initial_nodes - 1);
    nodes_.push_back(make_node(lambda));
  }
}

UnitaryFamily UnitaryFamily::from_nodes(std::vector<FamilyNode> nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("UnitaryFamily: need at least two nodes");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i - 1].lambda < nodes[i].lambda))
      throw std::invalid_argument("UnitaryFamily: node grid must be strictly increasing");
  UnitaryFamily fam;
  fam.nodes_ = std::move(nodes);
  return fam;
}

FamilyNode UnitaryFamily::make_node(double lambda) const {
  FamilyNode node;
  node.lambda = lambda;
  node.phases = eig_unitary(sampler_(lambda));
  return node;
}

double UnitaryFamily::max_adjacent_step() const {
  double worst = 0.0;
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    worst = std::max(worst, circle_hausdorff(nodes_[i - 1].phases, nodes_[i].phases));
  return worst;
}

void UnitaryFamily::refine(double delta_step, std::size_t node_budget) {
  if (!(delta_step > 0.0)) throw std::invalid_argument("refine: delta_step must be positive");
  if (!refinable())
    throw std::logic_error("refine: family has no sampling callback");
  std::size_t i = 0;
  while (i + 1 < nodes_.size()) {
    const double dist = circle_hausdorff(nodes_[i].phases, nodes_[i + 1].phases);
    const double width = nodes_[i + 1].lambda - nodes_[i].lambda;
    if (dist <= delta_step) {
      ++i;
      continue;
    }
    if (nodes_.size() >= node_budget || width < 1e-14) {
      std::ostringstream msg;
      msg << "refine: node budget " << node_budget << " exhausted; worst subinterval ["
          << nodes_[i].lambda << ", " << nodes_[i + 1].lambda << "] still moves by " << dist
          << " > " << delta_step;
      throw std::runtime_error(msg.str());
    }
    const double mid = 0.5 * (nodes_[i].lambda + nodes_[i + 1].lambda);
    nodes_.insert(nodes_.begin() + static_cast<std::ptrdiff_t>(i) + 1, make_node(mid));
  }
}

}  // namespace bkflow
