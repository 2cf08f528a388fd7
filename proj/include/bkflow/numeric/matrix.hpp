#ifndef BKFLOW_NUMERIC_MATRIX_HPP
#define BKFLOW_NUMERIC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace bkflow {

using Complex = std::complex<double>;

/// Dense real matrix, column-major storage.
class RealMatrix {
public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t i, std::size_t j) { return data_[i + j * rows_]; }
  double at(std::size_t i, std::size_t j) const { return data_[i + j * rows_]; }

  double* col(std::size_t j) { return data_.data() + j * rows_; }
  const double* col(std::size_t j) const { return data_.data() + j * rows_; }

  double max_abs() const;
  double frobenius_norm() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense complex matrix, column-major storage.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  static ComplexMatrix from_real(const RealMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& at(std::size_t i, std::size_t j) { return data_[i + j * rows_]; }
  Complex at(std::size_t i, std::size_t j) const { return data_[i + j * rows_]; }

  Complex* col(std::size_t j) { return data_.data() + j * rows_; }
  const Complex* col(std::size_t j) const { return data_.data() + j * rows_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  /// Determinant via LU with partial pivoting.
  Complex det() const;

  /// Solves (*this) x = b via LU with partial pivoting. Throws on a
  /// numerically singular system, reporting the smallest pivot.
  std::vector<Complex> solve(const std::vector<Complex>& b) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x);

}  // namespace bkflow

#endif
