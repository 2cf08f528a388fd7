#include "bkflow/scattering/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bkflow {

LatticePotential::LatticePotential(std::vector<int> sites, std::vector<double> values)
    : sites_(std::move(sites)), values_(std::move(values)) {
  if (sites_.size() != values_.size())
    throw std::invalid_argument("LatticePotential: sites and values have different lengths");
  for (std::size_t i = 1; i < sites_.size(); ++i) {
    if (sites_[i] <= sites_[i - 1]) {
      std::ostringstream msg;
      msg << "LatticePotential: sites must be strictly increasing (sites[" << i - 1
          << "]=" << sites_[i - 1] << ", sites[" << i << "]=" << sites_[i] << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

LatticePotential LatticePotential::single_site(int site, double value) {
  return LatticePotential({site}, {value});
}

int LatticePotential::support_min() const {
  if (empty()) throw std::logic_error("LatticePotential: empty support");
  return sites_.front();
}

int LatticePotential::support_max() const {
  if (empty()) throw std::logic_error("LatticePotential: empty support");
  return sites_.back();
}

int LatticePotential::diameter() const { return empty() ? 0 : sites_.back() - sites_.front(); }

double LatticePotential::value_at(int n) const {
  const auto it = std::lower_bound(sites_.begin(), sites_.end(), n);
  if (it == sites_.end() || *it != n) return 0.0;
  return values_[static_cast<std::size_t>(it - sites_.begin())];
}

double LatticePotential::max_abs() const {
  double v = 0.0;
  for (double x : values_) v = std::max(v, std::abs(x));
  return v;
}

LatticePotential LatticePotential::scaled(double factor) const {
  std::vector<double> vals = values_;
  for (double& x : vals) x *= factor;
  return LatticePotential(sites_, std::move(vals));
}

}  // namespace bkflow
