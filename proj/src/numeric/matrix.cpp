#include "bkflow/numeric/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bkflow {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

double RealMatrix::max_abs() const {
  double v = 0.0;
  for (double x : data_) v = std::max(v, std::abs(x));
  return v;
}

double RealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_real(const RealMatrix& r) {
  ComplexMatrix m(r.rows(), r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j)
    for (std::size_t i = 0; i < r.rows(); ++i) m.at(i, j) = Complex(r.at(i, j), 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.at(j, i) = std::conj(at(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.at(j, i) = at(i, j);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double v = 0.0;
  for (const Complex& x : data_) v = std::max(v, std::abs(x));
  return v;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& x : data_) x *= s;
  return *this;
}

namespace {

// LU with partial pivoting; returns pivoted factors in place plus sign and
// the row permutation. Used for det() and solve().
struct LuFactors {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  double min_pivot = 0.0;
};

LuFactors lu_factor(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("LU: matrix must be square");
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), 1, 0.0};
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu.at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(f.lu.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu.at(k, j), f.lu.at(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    min_pivot = std::min(min_pivot, best);
    if (best == 0.0) {
      f.min_pivot = 0.0;
      return f;  // singular; caller decides
    }
    const Complex pivot = f.lu.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = f.lu.at(i, k) / pivot;
      f.lu.at(i, k) = m;
      if (m != Complex(0.0, 0.0))
        for (std::size_t j = k + 1; j < n; ++j) f.lu.at(i, j) -= m * f.lu.at(k, j);
    }
  }
  f.min_pivot = min_pivot;
  return f;
}

}  // namespace

Complex ComplexMatrix::det() const {
  const LuFactors f = lu_factor(*this);
  Complex d(static_cast<double>(f.sign), 0.0);
  for (std::size_t i = 0; i < rows_; ++i) d *= f.lu.at(i, i);
  return d;
}

std::vector<Complex> ComplexMatrix::solve(const std::vector<Complex>& b) const {
  if (!is_square() || b.size() != rows_)
    throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = rows_;
  const LuFactors f = lu_factor(*this);
  const double scale = std::max(max_abs(), 1e-300);
  if (f.min_pivot <= 1e-14 * scale) {
    std::ostringstream msg;
    msg << "solve: system numerically singular (smallest pivot " << f.min_pivot
        << ", matrix scale " << scale << ")";
    throw std::runtime_error(msg.str());
  }
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu.at(i, j) * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= f.lu.at(ii, j) * x[j];
    x[ii] /= f.lu.at(ii, ii);
  }
  return x;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex bkj = b.at(k, j);
      if (bkj == Complex(0.0, 0.0)) continue;
      const Complex* ak = a.col(k);
      Complex* cj = c.col(j);
      for (std::size_t i = 0; i < a.rows(); ++i) cj[i] += ak[i] * bkj;
    }
  }
  return c;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Complex xj = x[j];
    if (xj == Complex(0.0, 0.0)) continue;
    const Complex* aj = a.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += aj[i] * xj;
  }
  return y;
}

}  // namespace bkflow
