#ifndef BKFLOW_SCATTERING_POTENTIAL_HPP
#define BKFLOW_SCATTERING_POTENTIAL_HPP

#include <vector>

namespace bkflow {

/// Finitely supported real potential on the integer line. Defines the
/// perturbed lattice operator B = A + V, with A the hopping operator
/// (Au)(n) = u(n+1) + u(n-1).
class LatticePotential {
public:
  LatticePotential() = default;  // zero potential
  LatticePotential(std::vector<int> sites, std::vector<double> values);

  static LatticePotential single_site(int site, double value);

  bool empty() const { return sites_.empty(); }
  std::size_t size() const { return sites_.size(); }

  const std::vector<int>& sites() const { return sites_; }
  const std::vector<double>& values() const { return values_; }

  int support_min() const;
  int support_max() const;
  /// support_max - support_min; 0 for empty or single-site support.
  int diameter() const;

  double value_at(int n) const;
  double max_abs() const;

  /// Potential scaled by a factor (for the vanishing-coupling checks).
  LatticePotential scaled(double factor) const;

private:
  std::vector<int> sites_;
  std::vector<double> values_;
};

}  // namespace bkflow

#endif
