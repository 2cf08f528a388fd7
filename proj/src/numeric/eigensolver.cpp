#include "bkflow/numeric/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bkflow/numeric/detail/tql.hpp"

namespace bkflow {

namespace {

// Householder reduction of a dense complex Hermitian matrix to a real
// symmetric tridiagonal (d, e). The complex subdiagonal produced by the
// reflectors is made real-nonnegative by a diagonal phase similarity, which
// is folded into the accumulated transform when vectors are requested.
struct ComplexTridiagReduction {
  std::vector<double> d;
  std::vector<double> e;
  ComplexMatrix q;  // empty when vectors were not requested
};

ComplexTridiagReduction householder_complex(const ComplexMatrix& input, bool with_vectors) {
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  std::vector<std::vector<Complex>> reflectors;  // unit vectors in coords k+1..n-1
  if (with_vectors) reflectors.resize(n >= 2 ? n - 2 : 0);

  std::vector<Complex> subdiag(n > 0 ? n - 1 : 0, Complex(0.0, 0.0));
  std::vector<Complex> p(n), u(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // size of the trailing block
    // Column below the diagonal.
    double sigma2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) sigma2 += std::norm(a.at(k + 1 + i, k));
    const double sigma = std::sqrt(sigma2);
    double tail2 = 0.0;
    for (std::size_t i = 1; i < m; ++i) tail2 += std::norm(a.at(k + 1 + i, k));

    if (sigma == 0.0 || tail2 == 0.0) {
      subdiag[k] = a.at(k + 1, k);
      continue;  // already in tridiagonal form at this column
    }

    const Complex alpha = a.at(k + 1, k);
    const Complex phase =
        (std::abs(alpha) == 0.0) ? Complex(1.0, 0.0) : alpha / std::abs(alpha);
    const Complex beta = -phase * sigma;

    // w = (x - beta*e1)/||.||, reflector H = I - 2 w w*.
    std::vector<Complex> w(m);
    w[0] = alpha - beta;
    for (std::size_t i = 1; i < m; ++i) w[i] = a.at(k + 1 + i, k);
    double wnorm2 = 0.0;
    for (const Complex& x : w) wnorm2 += std::norm(x);
    const double wnorm = std::sqrt(wnorm2);
    for (Complex& x : w) x /= wnorm;

    // Two-sided update of the trailing block B <- B - 2 u w* - 2 w u*,
    // u = B w - (w* B w) w.
    std::fill(p.begin(), p.begin() + m, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < m; ++j) {
      const Complex wj = w[j];
      if (wj == Complex(0.0, 0.0)) continue;
      const Complex* colj = a.col(k + 1 + j);
      for (std::size_t i = 0; i < m; ++i) p[i] += colj[k + 1 + i] * wj;
    }
    Complex kappa(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) kappa += std::conj(w[i]) * p[i];
    kappa = Complex(kappa.real(), 0.0);  // w*Bw is real for Hermitian B
    for (std::size_t i = 0; i < m; ++i) u[i] = p[i] - kappa * w[i];
    for (std::size_t j = 0; j < m; ++j) {
      const Complex wj = std::conj(w[j]);
      const Complex uj = std::conj(u[j]);
      Complex* colj = a.col(k + 1 + j);
      for (std::size_t i = 0; i < m; ++i)
        colj[k + 1 + i] -= 2.0 * (u[i] * wj + w[i] * uj);
    }

    subdiag[k] = beta;
    a.at(k + 1, k) = beta;
    for (std::size_t i = 2; i <= m; ++i) a.at(k + i, k) = Complex(0.0, 0.0);
    if (with_vectors) reflectors[k] = std::move(w);
  }
  if (n >= 2) subdiag[n - 2] = a.at(n - 1, n - 2);

  ComplexTridiagReduction red;
  red.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) red.d[i] = a.at(i, i).real();
  red.e.resize(n > 0 ? n - 1 : 0);

  // Diagonal phase similarity making the subdiagonal real nonnegative.
  std::vector<Complex> s(n, Complex(1.0, 0.0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double mag = std::abs(subdiag[i]);
    red.e[i] = mag;
    const Complex ph = (mag == 0.0) ? Complex(1.0, 0.0) : subdiag[i] / mag;
    s[i + 1] = s[i] * ph;
  }

  if (with_vectors) {
    // Backward accumulation of Q = H_0 H_1 ... H_{n-3}, then column phases.
    ComplexMatrix q = ComplexMatrix::identity(n);
    for (std::size_t kk = reflectors.size(); kk-- > 0;) {
      const std::vector<Complex>& w = reflectors[kk];
      if (w.empty()) continue;
      const std::size_t off = kk + 1;
      const std::size_t m = w.size();
      for (std::size_t j = 0; j < n; ++j) {
        Complex* colj = q.col(j);
        Complex dot(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) dot += std::conj(w[i]) * colj[off + i];
        if (dot == Complex(0.0, 0.0)) continue;
        const Complex f = 2.0 * dot;
        for (std::size_t i = 0; i < m; ++i) colj[off + i] -= f * w[i];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (s[j] == Complex(1.0, 0.0)) continue;
      Complex* colj = q.col(j);
      for (std::size_t i = 0; i < n; ++i) colj[i] *= s[j];
    }
    red.q = std::move(q);
  }
  return red;
}

// Real symmetric variant of the same reduction.
struct RealTridiagReduction {
  std::vector<double> d;
  std::vector<double> e;
  RealMatrix q;
};

RealTridiagReduction householder_real(const RealMatrix& input, bool with_vectors) {
  const std::size_t n = input.rows();
  RealMatrix a = input;
  std::vector<std::vector<double>> reflectors;
  if (with_vectors) reflectors.resize(n >= 2 ? n - 2 : 0);
  std::vector<double> p(n), u(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double sigma2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double x = a.at(k + 1 + i, k);
      sigma2 += x * x;
    }
    double tail2 = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
      const double x = a.at(k + 1 + i, k);
      tail2 += x * x;
    }
    if (sigma2 == 0.0 || tail2 == 0.0) continue;
    const double sigma = std::sqrt(sigma2);
    const double alpha = a.at(k + 1, k);
    const double beta = (alpha >= 0.0) ? -sigma : sigma;

    std::vector<double> w(m);
    w[0] = alpha - beta;
    for (std::size_t i = 1; i < m; ++i) w[i] = a.at(k + 1 + i, k);
    double wnorm2 = 0.0;
    for (double x : w) wnorm2 += x * x;
    const double wnorm = std::sqrt(wnorm2);
    for (double& x : w) x /= wnorm;

    std::fill(p.begin(), p.begin() + m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      const double wj = w[j];
      if (wj == 0.0) continue;
      const double* colj = a.col(k + 1 + j);
      for (std::size_t i = 0; i < m; ++i) p[i] += colj[k + 1 + i] * wj;
    }
    double kappa = 0.0;
    for (std::size_t i = 0; i < m; ++i) kappa += w[i] * p[i];
    for (std::size_t i = 0; i < m; ++i) u[i] = p[i] - kappa * w[i];
    for (std::size_t j = 0; j < m; ++j) {
      const double wj = w[j];
      const double uj = u[j];
      double* colj = a.col(k + 1 + j);
      for (std::size_t i = 0; i < m; ++i) colj[k + 1 + i] -= 2.0 * (u[i] * wj + w[i] * uj);
    }

    a.at(k + 1, k) = beta;
    for (std::size_t i = 2; i <= m; ++i) a.at(k + i, k) = 0.0;
    if (with_vectors) reflectors[k] = std::move(w);
  }

  RealTridiagReduction red;
  red.d.resize(n);
  red.e.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) red.d[i] = a.at(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) red.e[i] = a.at(i + 1, i);

  if (with_vectors) {
    RealMatrix q = RealMatrix::identity(n);
    for (std::size_t kk = reflectors.size(); kk-- > 0;) {
      const std::vector<double>& w = reflectors[kk];
      if (w.empty()) continue;
      const std::size_t off = kk + 1;
      const std::size_t m = w.size();
      for (std::size_t j = 0; j < n; ++j) {
        double* colj = q.col(j);
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += w[i] * colj[off + i];
        if (dot == 0.0) continue;
        const double f = 2.0 * dot;
        for (std::size_t i = 0; i < m; ++i) colj[off + i] -= f * w[i];
      }
    }
    red.q = std::move(q);
  }
  return red;
}

template <class Vec>
std::vector<std::size_t> ascending_order(const Vec& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return order;
}

}  // namespace

double EigenDecomposition::validate(const HermitianMatrix& m) const {
  const std::size_t n = m.dim();
  const ComplexMatrix& v = vectors;
  // Reconstruction residual ||M - V diag V*|| (Frobenius).
  ComplexMatrix rec(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k)
        acc += v.at(i, k) * eigenvalues[k] * std::conj(v.at(j, k));
      rec.at(i, j) = acc;
    }
  }
  rec -= m.matrix();
  const double scale = std::max(1.0, m.matrix().frobenius_norm());
  const double resid = rec.frobenius_norm() / scale;

  ComplexMatrix gram = v.adjoint() * v;
  gram -= ComplexMatrix::identity(n);
  const double ortho = gram.frobenius_norm();
  return std::max(resid, ortho);
}

EigenDecomposition eigh(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  ComplexTridiagReduction red = householder_complex(m.matrix(), true);
  ComplexMatrix z = std::move(red.q);
  detail::tql_implicit(red.d, red.e, [&z, n](std::size_t i, double c, double s) {
    Complex* zi = z.col(i);
    Complex* zi1 = z.col(i + 1);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex f = zi1[k];
      zi1[k] = s * zi[k] + c * f;
      zi[k] = c * zi[k] - s * f;
    }
  });
  const std::vector<std::size_t> order = ascending_order(red.d);
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = red.d[order[j]];
    const Complex* src = z.col(order[j]);
    std::copy(src, src + n, out.vectors.col(j));
  }
  return out;
}

std::vector<double> eigvalsh(const HermitianMatrix& m) {
  ComplexTridiagReduction red = householder_complex(m.matrix(), false);
  detail::tql_implicit(red.d, red.e, detail::NoRotation{});
  std::sort(red.d.begin(), red.d.end());
  return red.d;
}

RealEigenDecomposition eigh_real(const RealMatrix& sym) {
  const std::size_t n = sym.rows();
  RealTridiagReduction red = householder_real(sym, true);
  RealMatrix z = std::move(red.q);
  detail::tql_implicit(red.d, red.e, [&z, n](std::size_t i, double c, double s) {
    double* zi = z.col(i);
    double* zi1 = z.col(i + 1);
    for (std::size_t k = 0; k < n; ++k) {
      const double f = zi1[k];
      zi1[k] = s * zi[k] + c * f;
      zi[k] = c * zi[k] - s * f;
    }
  });
  const std::vector<std::size_t> order = ascending_order(red.d);
  RealEigenDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = red.d[order[j]];
    const double* src = z.col(order[j]);
    std::copy(src, src + n, out.vectors.col(j));
  }
  return out;
}

std::vector<double> eigvalsh_real(const RealMatrix& sym) {
  RealTridiagReduction red = householder_real(sym, false);
  detail::tql_implicit(red.d, red.e, detail::NoRotation{});
  std::sort(red.d.begin(), red.d.end());
  return red.d;
}

double spectral_norm(const ComplexMatrix& m) {
  // Largest singular value via the Gram matrix, which is Hermitian.
  const ComplexMatrix gram = m.adjoint() * m;
  const std::vector<double> ev = eigvalsh(HermitianMatrix(gram, 1e-10));
  const double top = ev.empty() ? 0.0 : std::max(0.0, ev.back());
  return std::sqrt(top);
}

std::vector<double> eig_unitary(const ComplexMatrix& u, double unitarity_tol) {
  if (!u.is_square()) throw std::invalid_argument("eig_unitary: matrix must be square");
  const std::size_t n = u.rows();
  ComplexMatrix defect = u.adjoint() * u;
  defect -= ComplexMatrix::identity(n);
  const double unitarity_defect = spectral_norm(defect);
  if (unitarity_defect > unitarity_tol) {
    std::ostringstream msg;
    msg << "eig_unitary: input is not unitary; ||U*U - I|| = " << unitarity_defect
        << " exceeds tolerance " << unitarity_tol;
    throw std::invalid_argument(msg.str());
  }

  // U is normal: its Hermitian and anti-Hermitian parts commute and share an
  // eigenbasis. Diagonalize the "cosine" part, then split each degenerate
  // cluster with the "sine" part restricted to the cluster subspace.
  const ComplexMatrix ua = u.adjoint();
  ComplexMatrix hc(n, n), hs(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Complex x = u.at(i, j);
      const Complex y = ua.at(i, j);
      hc.at(i, j) = 0.5 * (x + y);
      hs.at(i, j) = Complex(0.0, -0.5) * (x - y);
    }
  const HermitianMatrix hcos(hc, 1e-6);
  const HermitianMatrix hsin(hs, 1e-6);
  EigenDecomposition dc = eigh(hcos);

  ComplexMatrix basis = dc.vectors;
  const double cluster_tol = 1e-7;
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && dc.eigenvalues[stop] - dc.eigenvalues[stop - 1] < cluster_tol) ++stop;
    const std::size_t m = stop - start;
    if (m > 1) {
      // Restrict the sine part to the cluster and rotate the basis.
      ComplexMatrix w(n, m);
      for (std::size_t j = 0; j < m; ++j)
        std::copy(basis.col(start + j), basis.col(start + j) + n, w.col(j));
      const ComplexMatrix sub = w.adjoint() * (hsin.matrix() * w);
      EigenDecomposition ds = eigh(HermitianMatrix(sub, 1e-6));
      const ComplexMatrix rotated = w * ds.vectors;
      for (std::size_t j = 0; j < m; ++j)
        std::copy(rotated.col(j), rotated.col(j) + n, basis.col(start + j));
    }
    start = stop;
  }

  const ComplexMatrix hc_basis = hcos.matrix() * basis;
  const ComplexMatrix hs_basis = hsin.matrix() * basis;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> phases(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex c(0.0, 0.0), s(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      c += std::conj(basis.at(i, j)) * hc_basis.at(i, j);
      s += std::conj(basis.at(i, j)) * hs_basis.at(i, j);
    }
    double theta = std::atan2(s.real(), c.real());
    if (theta < 0.0) theta += two_pi;
    if (theta >= two_pi) theta = 0.0;
    phases[j] = theta;
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

HermitianMatrix spectral_projection(const HermitianMatrix& m, double lambda, double gap_tol) {
  const EigenDecomposition dec = eigh(m);
  const std::size_t n = m.dim();
  for (double ev : dec.eigenvalues) {
    if (std::abs(ev - lambda) < gap_tol) {
      std::ostringstream msg;
      msg << "spectral_projection: lambda = " << lambda
          << " on spectrum; counting ambiguous (eigenvalue " << ev << " within gap tolerance "
          << gap_tol << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  ComplexMatrix p(n, n);
  for (std::size_t k = 0; k < n && dec.eigenvalues[k] < lambda; ++k) {
    const Complex* v = dec.vectors.col(k);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex vj = std::conj(v[j]);
      Complex* colj = p.col(j);
      for (std::size_t i = 0; i < n; ++i) colj[i] += v[i] * vj;
    }
  }
  return HermitianMatrix(p, 1e-10);
}

int eigenvalue_count_below(const std::vector<double>& ev, double lambda, double gap_tol) {
  const auto it = std::lower_bound(ev.begin(), ev.end(), lambda);
  if (it != ev.end() && std::abs(*it - lambda) < gap_tol) {
    std::ostringstream msg;
    msg << "eigenvalue_count_below: lambda = " << lambda
        << " on spectrum; counting ambiguous (eigenvalue " << *it << ")";
    throw std::invalid_argument(msg.str());
  }
  if (it != ev.begin() && std::abs(*(it - 1) - lambda) < gap_tol) {
    std::ostringstream msg;
    msg << "eigenvalue_count_below: lambda = " << lambda
        << " on spectrum; counting ambiguous (eigenvalue " << *(it - 1) << ")";
    throw std::invalid_argument(msg.str());
  }
  return static_cast<int>(it - ev.begin());
}

}  // namespace bkflow
