#include "bkflow/numeric/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bkflow/numeric/eigensolver.hpp"

namespace bkflow {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed ^ (kGolden * (stream + 1));
  // Warm up so that nearby seeds decorrelate.
  splitmix(state_);
  splitmix(state_);
}

std::uint64_t RandomStream::next_u64() { return splitmix(state_); }

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double RandomStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

Complex RandomStream::complex_normal() {
  return Complex(normal(), normal()) / std::sqrt(2.0);
}

HermitianMatrix random_hermitian(std::size_t dim, RandomStream& rng) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m.at(i, i) = Complex(rng.normal(), 0.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z = rng.complex_normal();
      m.at(i, j) = z;
      m.at(j, i) = std::conj(z);
    }
  }
  return HermitianMatrix(m);
}

HermitianMatrix random_rank_k(std::size_t dim, std::size_t rank, RandomStream& rng) {
  if (rank > dim) throw std::invalid_argument("random_rank_k: rank exceeds dimension");
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<Complex> w(dim);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] = rng.complex_normal();
      norm2 += std::norm(w[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    const double weight = rng.normal();
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex wj = std::conj(w[j]) * inv;
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) += weight * (w[i] * inv) * wj;
    }
  }
  return HermitianMatrix(m, 1e-10);
}

HermitianMatrix random_projection(std::size_t dim, std::size_t rank, RandomStream& rng) {
  if (rank > dim) throw std::invalid_argument("random_projection: rank exceeds dimension");
  // Orthonormalize `rank` random vectors by modified Gram-Schmidt.
  std::vector<std::vector<Complex>> basis;
  basis.reserve(rank);
  while (basis.size() < rank) {
    std::vector<Complex> v(dim);
    for (auto& x : v) x = rng.complex_normal();
    for (const auto& b : basis) {
      Complex dot(0.0, 0.0);
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * b[i];
    }
    double norm2 = 0.0;
    for (const auto& x : v) norm2 += std::norm(x);
    if (norm2 < 1e-12) continue;  // rare degenerate draw; redraw
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
  }
  ComplexMatrix p(dim, dim);
  for (const auto& b : basis) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex bj = std::conj(b[j]);
      for (std::size_t i = 0; i < dim; ++i) p.at(i, j) += b[i] * bj;
    }
  }
  return HermitianMatrix(p, 1e-10);
}

ComplexMatrix random_unitary(std::size_t dim, RandomStream& rng) {
  const HermitianMatrix h = random_hermitian(dim, rng);
  return eigh(h).vectors;
}

}  // namespace bkflow
