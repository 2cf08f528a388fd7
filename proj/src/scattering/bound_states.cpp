#include "bkflow/scattering/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bkflow {

SymTridiagonal box_operator(const LatticePotential& pot, int L) {
  if (L < 1) throw std::invalid_argument("box_operator: L must be positive");
  const std::size_t n = static_cast<std::size_t>(2 * L + 1);
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < pot.size(); ++i) {
    const int site = pot.sites()[i];
    if (site < -L || site > L) {
      std::ostringstream msg;
      msg << "box_operator: support site " << site << " outside box [-" << L << ", " << L << "]";
      throw std::invalid_argument(msg.str());
    }
    d[static_cast<std::size_t>(site + L)] = pot.values()[i];
  }
  return SymTridiagonal(std::move(d), std::vector<double>(n - 1, 1.0));
}

SymTridiagonal free_box_operator(int L) { return box_operator(LatticePotential(), L); }

std::vector<BoundState> bound_states(const LatticePotential& pot, int L) {
  const int min_l = 10 * (pot.diameter() + 1);
  if (L < min_l) {
    std::ostringstream msg;
    msg << "bound_states: L = " << L << " below the minimum " << min_l
        << " for this support diameter";
    throw std::invalid_argument(msg.str());
  }
  const double margin = 10.0 / static_cast<double>(L);
  const auto outside = [margin](double x) {
    return x < -2.0 - margin || x > 2.0 + margin;
  };

  const std::vector<double> ev = box_operator(pot, L).eigenvalues();
  const std::vector<double> ev2 = box_operator(pot, 2 * L).eigenvalues();

  std::vector<BoundState> out;
  for (double x : ev) {
    if (!outside(x)) continue;
    // nearest eigenvalue of the doubled box
    const auto it = std::lower_bound(ev2.begin(), ev2.end(), x);
    double best = std::numeric_limits<double>::infinity();
    double refined = x;
    if (it != ev2.end() && std::abs(*it - x) < best) {
      best = std::abs(*it - x);
      refined = *it;
    }
    if (it != ev2.begin() && std::abs(*(it - 1) - x) < best) {
      best = std::abs(*(it - 1) - x);
      refined = *(it - 1);
    }
    out.push_back({refined, best <= 1e-6});
  }
  return out;
}

}  // namespace bkflow
