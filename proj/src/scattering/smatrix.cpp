#include "bkflow/scattering/smatrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bkflow/numeric/eigensolver.hpp"
#include "bkflow/scattering/resolvent.hpp"

namespace bkflow {

namespace {

Complex unit_phase(double angle) { return Complex(std::cos(angle), std::sin(angle)); }

void require_in_band(double lambda, double margin, const char* who) {
  if (!(std::abs(lambda) <= 2.0 - margin)) {
    std::ostringstream msg;
    msg << who << ": lambda = " << lambda << " within margin " << margin
        << " of a band edge; rejected";
    throw std::invalid_argument(msg.str());
  }
}

// Solves the shared 2x2 matching system. Columns of C are M*phi_plus(n0)
// and phi_minus(n1+1). The left-incident solution is e^{-ikn} + r e^{+ikn}
// on the left of the support and t e^{-ikn} on the right; the right-incident
// solution mirrors it.
struct Matching {
  Complex t_from_left, r_from_left;
  Complex t_from_right, r_from_right;
};

Matching match_plane_waves(const Transfer2& m, double k, int n0, int n1) {
  const auto phi = [k](int sign, int n) {
    // (e^{sign ikn}, e^{sign ik(n-1)})
    return std::array<Complex, 2>{unit_phase(sign * k * n), unit_phase(sign * k * (n - 1))};
  };
  const auto apply = [&m](const std::array<Complex, 2>& v) {
    return std::array<Complex, 2>{m.m00 * v[0] + m.m01 * v[1], m.m10 * v[0] + m.m11 * v[1]};
  };

  const std::array<Complex, 2> m_phi_plus = apply(phi(+1, n0));
  const std::array<Complex, 2> m_phi_minus = apply(phi(-1, n0));
  const std::array<Complex, 2> out_minus = phi(-1, n1 + 1);
  const std::array<Complex, 2> out_plus = phi(+1, n1 + 1);

  ComplexMatrix c(2, 2);
  c.at(0, 0) = m_phi_plus[0];
  c.at(1, 0) = m_phi_plus[1];
  c.at(0, 1) = out_minus[0];
  c.at(1, 1) = out_minus[1];

  Matching out;
  try {
    // r * M phi_+(n0) - t * phi_-(n1+1) = -M phi_-(n0)
    const std::vector<Complex> x =
        c.solve({-m_phi_minus[0], -m_phi_minus[1]});
    out.r_from_left = x[0];
    out.t_from_left = -x[1];
    // t' * M phi_+(n0) - r' * phi_-(n1+1) = phi_+(n1+1)
    const std::vector<Complex> y = c.solve({out_plus[0], out_plus[1]});
    out.t_from_right = y[0];
    out.r_from_right = -y[1];
  } catch (const std::runtime_error& err) {
    std::ostringstream msg;
    msg << "s_matrix: plane-wave matching system numerically singular: " << err.what();
    throw std::runtime_error(msg.str());
  }
  return out;
}

}  // namespace

Transfer2 transfer_matrix(const LatticePotential& pot, double lambda) {
  const int n0 = pot.empty() ? 0 : pot.support_min();
  const int n1 = pot.empty() ? 0 : pot.support_max();
  Transfer2 acc;
  for (int n = n0; n <= n1; ++n) {
    const double a = lambda - pot.value_at(n);
    // acc <- T_n * acc with T_n = [[a, -1], [1, 0]]
    const Transfer2 prev = acc;
    acc.m00 = a * prev.m00 - prev.m10;
    acc.m01 = a * prev.m01 - prev.m11;
    acc.m10 = prev.m00;
    acc.m11 = prev.m01;
  }
  return acc;
}

double fiber_weight(double lambda) {
  const double k = momentum(lambda);
  return 1.0 / std::sqrt(4.0 * std::numbers::pi * std::sin(k));
}

ComplexMatrix s_matrix_transfer(const LatticePotential& pot, double lambda,
                                double band_margin) {
  require_in_band(lambda, band_margin, "s_matrix");
  if (pot.empty()) return ComplexMatrix::identity(2);
  const double k = momentum(lambda);
  const Transfer2 m = transfer_matrix(pot, lambda);
  const Matching w = match_plane_waves(m, k, pot.support_min(), pot.support_max());
  // Incoming channel 1 (e^{-ikn}) reflects into channel 0 and transmits into
  // channel 1; incoming channel 0 mirrors it.
  ComplexMatrix s(2, 2);
  s.at(0, 0) = w.t_from_right;
  s.at(0, 1) = w.r_from_left;
  s.at(1, 0) = w.r_from_right;
  s.at(1, 1) = w.t_from_left;
  return s;
}

ComplexMatrix s_matrix_stationary(const LatticePotential& pot, double lambda,
                                  double band_margin) {
  require_in_band(lambda, band_margin, "s_matrix_stationary");
  if (pot.empty()) return ComplexMatrix::identity(2);
  const double k = momentum(lambda);
  const double s_k = std::sin(k);
  const std::size_t m = pot.size();
  const std::vector<int>& sites = pot.sites();
  const std::vector<double>& values = pot.values();

  // F = I + V R_0(lambda + i0) over the support; T = F^{-1} V.
  ComplexMatrix f(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      f.at(i, j) = values[i] * free_resolvent_kernel(lambda, 0.0, sites[i], sites[j]);
      if (i == j) f.at(i, j) += 1.0;
    }
  ComplexMatrix t_matrix(m, m);
  try {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Complex> rhs(m, Complex(0.0, 0.0));
      rhs[j] = Complex(values[j], 0.0);
      const std::vector<Complex> col = f.solve(rhs);
      for (std::size_t i = 0; i < m; ++i) t_matrix.at(i, j) = col[i];
    }
  } catch (const std::runtime_error& err) {
    std::ostringstream msg;
    msg << "s_matrix_stationary: T-matrix system singular (resonance at this lambda); "
        << err.what();
    throw std::runtime_error(msg.str());
  }

  // S_ab = delta_ab - (i / 2 sin k) sum e^{-i a k n} T(n,m) e^{+i b k m},
  // a,b in {+1,-1} indexing channels (0,1).
  ComplexMatrix s = ComplexMatrix::identity(2);
  const Complex pref = Complex(0.0, -1.0 / (2.0 * s_k));
  const int signs[2] = {+1, -1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Complex acc(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          acc += unit_phase(-signs[a] * k * sites[i]) * t_matrix.at(i, j) *
                 unit_phase(signs[b] * k * sites[j]);
      s.at(a, b) += pref * acc;
    }
  return s;
}

ComplexMatrix smooth_kernel_Z(const LatticePotential& pot, double lambda,
                              double band_margin) {
  require_in_band(lambda, band_margin, "smooth_kernel_Z");
  const double k = momentum(lambda);
  const double w = fiber_weight(lambda);
  ComplexMatrix z(2, pot.size());
  for (std::size_t j = 0; j < pot.size(); ++j) {
    const double weight = w * std::sqrt(std::abs(pot.values()[j]));
    z.at(0, j) = weight * unit_phase(-k * pot.sites()[j]);
    z.at(1, j) = weight * unit_phase(+k * pot.sites()[j]);
  }
  return z;
}

double alpha_of(const ComplexMatrix& s) {
  ComplexMatrix diff = s;
  diff -= ComplexMatrix::identity(s.rows());
  return 0.5 * spectral_norm(diff);
}

ScatteringPoint s_matrix(const LatticePotential& pot, double lambda, double band_margin) {
  ScatteringPoint point;
  point.lambda = lambda;
  point.s = s_matrix_transfer(pot, lambda, band_margin);
  point.k = momentum(lambda);
  point.t = point.s.at(1, 1);
  point.r_plus = point.s.at(0, 1);
  point.r_minus = point.s.at(1, 0);
  const std::vector<double> phases = eig_unitary(point.s, 1e-8);
  point.eigenphases = {phases[0], phases[1]};
  point.z = smooth_kernel_Z(pot, lambda, band_margin);
  point.alpha = alpha_of(point.s);
  return point;
}

}  // namespace bkflow
