#include "bkflow/projections/projection_pair.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bkflow {

namespace {

void check_projection(const HermitianMatrix& p, double tol, const char* which) {
  ComplexMatrix idem = p.matrix() * p.matrix();
  idem -= p.matrix();
  const double defect = spectral_norm(idem);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "pair_spectrum: " << which << " is not an orthogonal projection; idempotency defect "
        << defect << " exceeds " << tol;
    throw std::invalid_argument(msg.str());
  }
}

struct Cluster {
  double center;
  int multiplicity;
};

std::vector<Cluster> cluster_values(const std::vector<double>& sorted, double tau) {
  std::vector<Cluster> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    double sum = sorted[i];
    while (j < sorted.size() && sorted[j] - sorted[j - 1] <= tau) {
      sum += sorted[j];
      ++j;
    }
    out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

}  // namespace

ProjectionPair::ProjectionPair(const HermitianMatrix& p, const HermitianMatrix& q,
                               double proj_tol)
    : p_(p), q_(q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("pair_spectrum: projections have different dimensions");
  check_projection(p_, proj_tol, "P");
  check_projection(q_, proj_tol, "Q");
  ComplexMatrix diff = p_.matrix();
  diff -= q_.matrix();
  spectrum_ = eigvalsh(HermitianMatrix(diff, 1e-10));
  for (double mu : spectrum_) {
    if (mu < -1.0 - 1e-10 || mu > 1.0 + 1e-10) {
      std::ostringstream msg;
      msg << "pair_spectrum: eigenvalue " << mu << " of P-Q outside [-1,1]";
      throw std::runtime_error(msg.str());
    }
  }
}

bool ProjectionPair::sign_symmetric(double tau) const {
  const std::vector<Cluster> clusters = cluster_values(spectrum_, tau);
  for (const Cluster& c : clusters) {
    if (std::abs(c.center) <= tau) continue;            // 0 is self-paired
    if (std::abs(c.center) >= 1.0 - tau) continue;      // the +-1 kernels are exempt
    bool matched = false;
    for (const Cluster& d : clusters) {
      if (std::abs(d.center + c.center) <= tau) {
        matched = (d.multiplicity == c.multiplicity);
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

ProjectionPair pair_spectrum(const HermitianMatrix& p, const HermitianMatrix& q,
                             double proj_tol) {
  return ProjectionPair(p, q, proj_tol);
}

IndexResult fredholm_index(const ProjectionPair& pair, double eig_tol) {
  const std::vector<double>& mu = pair.difference_spectrum();
  IndexResult res;
  double gap = std::numeric_limits<double>::infinity();
  for (double m : mu) {
    const bool in_plus_band = (m >= 1.0 - 2.0 * eig_tol) && (m < 1.0 - eig_tol);
    const bool in_minus_band = (m > -1.0 + eig_tol) && (m <= -1.0 + 2.0 * eig_tol);
    if (in_plus_band || in_minus_band) {
      std::ostringstream msg;
      msg << "fredholm_index: eigenvalue " << m << " of P-Q inside the separation band at "
          << (in_plus_band ? "+1" : "-1") << " (eig_tol " << eig_tol
          << "); pair numerically non-Fredholm at this tolerance";
      throw std::runtime_error(msg.str());
    }
    if (m >= 1.0 - eig_tol) {
      ++res.dim_ker_plus;
    } else if (m <= -1.0 + eig_tol) {
      ++res.dim_ker_minus;
    } else {
      gap = std::min(gap, std::min(std::abs(1.0 - m), std::abs(m + 1.0)));
    }
  }
  res.index = res.dim_ker_plus - res.dim_ker_minus;
  res.gap_to_one = gap;
  return res;
}

IndexResult fredholm_index(const HermitianMatrix& p, const HermitianMatrix& q, double eig_tol) {
  return fredholm_index(pair_spectrum(p, q), eig_tol);
}

double trace_identity_check(const HermitianMatrix& p, const HermitianMatrix& q,
                            double eig_tol) {
  const IndexResult res = fredholm_index(p, q, eig_tol);
  ComplexMatrix diff = p.matrix();
  diff -= q.matrix();
  return std::abs(diff.trace().real() - static_cast<double>(res.index));
}

long xi_finite(const HermitianMatrix& a, const HermitianMatrix& b, double lambda,
               double gap_tol) {
  const HermitianMatrix ea = spectral_projection(a, lambda, gap_tol);
  const HermitianMatrix eb = spectral_projection(b, lambda, gap_tol);
  return fredholm_index(ea, eb).index;
}

}  // namespace bkflow
