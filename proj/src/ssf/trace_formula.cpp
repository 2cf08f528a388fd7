#include "bkflow/ssf/trace_formula.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bkflow/numeric/eigensolver.hpp"

namespace bkflow {

namespace {

double simpson(const std::function<double(double)>& f, double lo, double hi, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (hi - lo) / intervals;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i) acc += f(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return acc * h / 3.0;
}

}  // namespace

double trace_formula_residual(const HermitianMatrix& a, const HermitianMatrix& b,
                              const TestFunction& phi, int quadrature_points) {
  if (quadrature_points < 1000)
    throw std::invalid_argument("trace_formula_residual: quadrature_points must be >= 1000");
  const std::vector<double> ev_a = eigvalsh(a);
  const std::vector<double> ev_b = eigvalsh(b);
  const double spec_lo = std::min(ev_a.front(), ev_b.front());
  const double spec_hi = std::max(ev_a.back(), ev_b.back());
  if (phi.support_lo > spec_lo - 1e-9 || phi.support_hi < spec_hi + 1e-9) {
    std::ostringstream msg;
    msg << "trace_formula_residual: test-function support [" << phi.support_lo << ", "
        << phi.support_hi << "] does not cover the spectral range [" << spec_lo << ", "
        << spec_hi << "]";
    throw std::invalid_argument(msg.str());
  }

  // Left side through the eigendecompositions, accumulated pairwise so that
  // B = A cancels exactly.
  double lhs = 0.0;
  for (std::size_t i = 0; i < ev_a.size(); ++i) lhs += phi.value(ev_b[i]) - phi.value(ev_a[i]);

  // Jump representation of xi = N_A - N_B: +1 at eigenvalues of A, -1 at
  // eigenvalues of B.
  struct Jump {
    double at;
    int size;
  };
  std::vector<Jump> jumps;
  jumps.reserve(ev_a.size() + ev_b.size());
  for (double t : ev_a) jumps.push_back({t, +1});
  for (double t : ev_b) jumps.push_back({t, -1});
  std::stable_sort(jumps.begin(), jumps.end(),
                   [](const Jump& x, const Jump& y) { return x.at < y.at; });

  // Constancy intervals of xi between consecutive jumps, clipped to the
  // declared support.
  const double lo = std::max(phi.support_lo, spec_lo - 1.0);
  const double hi = std::min(phi.support_hi, spec_hi + 1.0);
  double integral_exact = 0.0;
  double integral_quad = 0.0;
  double cursor = lo;
  int xi = 0;
  const double total_len = hi - lo;
  std::size_t j = 0;
  while (cursor < hi) {
    while (j < jumps.size() && jumps[j].at <= cursor) {
      xi += jumps[j].size;
      ++j;
    }
    double next = hi;
    if (j < jumps.size() && jumps[j].at < hi) next = jumps[j].at;
    if (next > cursor && xi != 0) {
      integral_exact += xi * (phi.value(next) - phi.value(cursor));
      const int pieces = std::max(
          8, static_cast<int>(std::lround(quadrature_points * (next - cursor) / total_len)));
      integral_quad += xi * simpson(phi.derivative, cursor, next, pieces);
    }
    if (next == hi) break;
    cursor = next;
  }

  return std::max(std::abs(lhs - integral_exact), std::abs(lhs - integral_quad));
}

}  // namespace bkflow
