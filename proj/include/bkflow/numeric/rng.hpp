#ifndef BKFLOW_NUMERIC_RNG_HPP
#define BKFLOW_NUMERIC_RNG_HPP

#include <cstdint>
#include <vector>

#include "bkflow/numeric/hermitian.hpp"
#include "bkflow/numeric/matrix.hpp"

namespace bkflow {

/// Counter-based deterministic random stream. A master 64-bit seed plus a
/// stream index fully determine the sequence: state = splitmix(seed xor
/// golden*(stream+1)), then repeated splitmix steps. Independent streams let
/// parallel consumers draw without sharing state.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform01();                      // in [0, 1)
  double uniform(double lo, double hi);
  double normal();                         // standard normal, Box-Muller
  Complex complex_normal();                // E|z|^2 = 1

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random dense Hermitian matrix with entries of unit scale.
HermitianMatrix random_hermitian(std::size_t dim, RandomStream& rng);

/// Random Hermitian perturbation of rank exactly `rank` (almost surely).
HermitianMatrix random_rank_k(std::size_t dim, std::size_t rank, RandomStream& rng);

/// Random orthogonal projection of the given rank.
HermitianMatrix random_projection(std::size_t dim, std::size_t rank, RandomStream& rng);

/// Random unitary matrix (eigenvector matrix of a random Hermitian).
ComplexMatrix random_unitary(std::size_t dim, RandomStream& rng);

}  // namespace bkflow

#endif
