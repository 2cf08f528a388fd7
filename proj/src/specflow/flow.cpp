#include "bkflow/specflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bkflow/numeric/eigensolver.hpp"

namespace bkflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_angle(double theta, const char* who) {
  if (!(theta > 0.0 && theta < kTwoPi)) {
    std::ostringstream msg;
    msg << who << ": angle " << theta << " outside (0, 2pi)";
    throw std::invalid_argument(msg.str());
  }
}

bool node_clear_of(const FamilyNode& node, double theta, double phase_tol) {
  for (double p : node.phases)
    if (circle_distance(p, theta) < phase_tol) return false;
  return true;
}

}  // namespace

int counting_phases(const std::vector<double>& phases, double theta1, double theta2,
                    double phase_tol) {
  require_angle(theta1, "counting_between");
  require_angle(theta2, "counting_between");
  if (theta1 == theta2) return 0;
  if (theta1 > theta2) return -counting_phases(phases, theta2, theta1, phase_tol);
  int count = 0;
  for (double p : phases) {
    if (circle_distance(p, theta1) < phase_tol || circle_distance(p, theta2) < phase_tol) {
      std::ostringstream msg;
      msg << "counting_between: eigenphase " << p << " within " << phase_tol
          << " of an endpoint; counting ambiguous at endpoint";
      throw std::runtime_error(msg.str());
    }
    if (p >= theta1 && p < theta2) ++count;
  }
  return count;
}

int counting_between(const ComplexMatrix& u, double theta1, double theta2, double phase_tol) {
  return counting_phases(eig_unitary(u), theta1, theta2, phase_tol);
}

GapAngle find_gap_angle(const UnitaryFamily& fam, std::size_t first, std::size_t last,
                        double delta_step) {
  std::vector<double> blockers;
  for (std::size_t i = first; i <= last; ++i)
    for (double p : fam.node(i).phases) {
      blockers.push_back(p);
      // fattening wraps around the cut at 0
      blockers.push_back(p - kTwoPi);
      blockers.push_back(p + kTwoPi);
    }
  std::sort(blockers.begin(), blockers.end());

  // Arcs of (0, 2pi) clear of every delta-fattened phase; 0 and 2pi act as
  // walls (the point 1 of the circle is excluded from all counting).
  GapAngle best;
  const auto consider = [&best](double lo, double hi) {
    const double width = hi - lo;
    if (width > best.arc_width) {
      best.arc_width = width;
      best.theta0 = 0.5 * (lo + hi);
    }
  };
  double cursor = 0.0;
  for (double p : blockers) {
    const double lo = cursor;
    const double hi = p - delta_step;
    if (hi > lo) consider(lo, hi);
    cursor = std::max(cursor, p + delta_step);
  }
  if (cursor < kTwoPi) consider(cursor, kTwoPi);

  best.found = best.arc_width >= 3.0 * delta_step;
  return best;
}

namespace {

// Per-subinterval flow via the two-point counting difference.
long subinterval_flow(const UnitaryFamily& fam, std::size_t first, std::size_t last,
                      double theta, double theta0, double phase_tol) {
  return counting_phases(fam.node(last).phases, theta, theta0, phase_tol) -
         counting_phases(fam.node(first).phases, theta, theta0, phase_tol);
}

}  // namespace

FlowResult spectral_flow(UnitaryFamily& fam, double theta, double delta_step,
                         std::size_t node_budget, double phase_tol) {
  require_angle(theta, "spectral_flow");
  if (!node_clear_of(fam.node(0), theta, phase_tol) ||
      !node_clear_of(fam.node(fam.node_count() - 1), theta, phase_tol)) {
    std::ostringstream msg;
    msg << "spectral_flow: an eigenphase of an endpoint unitary lies at the target angle "
        << theta << "; flow undefined";
    throw std::invalid_argument(msg.str());
  }

  double step = delta_step;
  for (;;) {
    if (fam.refinable()) fam.refine(step, node_budget);

    FlowResult result;
    result.theta = theta;
    result.delta_step_used = step;
    const std::size_t last = fam.node_count() - 1;
    std::size_t start = 0;
    bool need_finer = false;

    while (start < last) {
      // Greedy maximal extension: a gap over [start, j] only shrinks as j
      // grows, so the admissible j form a prefix; binary search its end.
      if (!find_gap_angle(fam, start, start + 1, step).found) {
        need_finer = true;
        break;
      }
      std::size_t lo = start + 1;  // known good
      std::size_t hi = last;       // candidate
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (find_gap_angle(fam, start, mid, step).found)
          lo = mid;
        else
          hi = mid - 1;
      }
      std::size_t stop = lo;
      // The cut node doubles as a counting endpoint, so back off while an
      // eigenphase sits at the target there.
      while (stop > start && stop != last && !node_clear_of(fam.node(stop), theta, phase_tol))
        --stop;
      if (stop == start) {
        need_finer = true;
        break;
      }
      const GapAngle gap = find_gap_angle(fam, start, stop, step);
      result.partition.push_back({start, stop, gap.theta0});
      result.flow += subinterval_flow(fam, start, stop, theta, gap.theta0, phase_tol);

      // Crossing log: bracket the counting jumps between adjacent countable
      // nodes (diagnostic only).
      std::size_t prev = start;
      int prev_count = counting_phases(fam.node(start).phases, theta, gap.theta0, phase_tol);
      for (std::size_t j = start + 1; j <= stop; ++j) {
        if (!node_clear_of(fam.node(j), theta, phase_tol)) continue;
        const int cur = counting_phases(fam.node(j).phases, theta, gap.theta0, phase_tol);
        if (cur != prev_count)
          result.crossings.push_back(
              {fam.node(prev).lambda, fam.node(j).lambda, cur > prev_count ? +1 : -1});
        prev = j;
        prev_count = cur;
      }
      start = stop;
    }

    if (!need_finer) return result;
    if (!fam.refinable() || fam.node_count() >= node_budget) {
      std::ostringstream msg;
      msg << "spectral_flow: no gap angle found at step " << step
          << " and the refinement budget is exhausted";
      throw std::runtime_error(msg.str());
    }
    step *= 0.5;
  }
}

long flow_with_partition(const UnitaryFamily& fam, double theta,
                         const std::vector<std::size_t>& cuts, double delta_step,
                         double phase_tol) {
  require_angle(theta, "flow_with_partition");
  if (cuts.size() < 2 || cuts.front() != 0 || cuts.back() != fam.node_count() - 1)
    throw std::invalid_argument("flow_with_partition: cuts must span the whole family");
  long total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const GapAngle gap = find_gap_angle(fam, cuts[i], cuts[i + 1], delta_step);
    if (!gap.found) {
      std::ostringstream msg;
      msg << "flow_with_partition: subinterval [" << fam.node(cuts[i]).lambda << ", "
          << fam.node(cuts[i + 1]).lambda << "] admits no gap angle";
      throw std::runtime_error(msg.str());
    }
    total += subinterval_flow(fam, cuts[i], cuts[i + 1], theta, gap.theta0, phase_tol);
  }
  return total;
}

}  // namespace bkflow
