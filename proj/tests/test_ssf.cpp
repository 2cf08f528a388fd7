#include <doctest.h>

#include <cmath>
#include <vector>

#include "bkflow/numeric/rng.hpp"
#include "bkflow/projections/projection_pair.hpp"
#include "bkflow/ssf/counting.hpp"
#include "bkflow/ssf/test_functions.hpp"
#include "bkflow/ssf/trace_formula.hpp"

using namespace bkflow;

TEST_SUITE_BEGIN("ssf");

TEST_CASE("counting: basic staircase") {
  const HermitianMatrix m = HermitianMatrix::diagonal({0.0, 1.0, 2.0});
  CHECK(counting(m, -5.0) == 0);
  CHECK(counting(m, 1.5) == 2);
  CHECK(counting(m, 2.5) == 3);
  CHECK_THROWS_AS(counting(m, 1.0), std::invalid_argument);
}

TEST_CASE("counting: matches the projection trace") {
  RandomStream rng(12, 6);
  const HermitianMatrix m = random_hermitian(11, rng);
  const std::vector<double> ev = eigvalsh(m);
  const double lambda = 0.5 * (ev[4] + ev[5]);
  const HermitianMatrix p = spectral_projection(m, lambda);
  CHECK(std::abs(p.matrix().trace().real() - counting(m, lambda)) < 1e-8);
}

TEST_CASE("ssf_finite: examples and cross-module agreement") {
  const HermitianMatrix a1 = HermitianMatrix::diagonal({0.0});
  const HermitianMatrix b1 = HermitianMatrix::diagonal({1.0});
  CHECK(ssf_finite(a1, b1, 0.5) == 1);

  RandomStream rng(13, 7);
  const HermitianMatrix a = random_hermitian(20, rng);
  ComplexMatrix bm = a.matrix();
  bm += random_rank_k(20, 3, rng).matrix();
  const HermitianMatrix b(bm, 1e-10);
  CHECK(ssf_finite(a, a, 0.123) == 0);

  const CountingFunction na = CountingFunction::of(a);
  const CountingFunction nb = CountingFunction::of(b);
  const double lo = std::min(na.min_eigenvalue(), nb.min_eigenvalue());
  const double hi = std::max(na.max_eigenvalue(), nb.max_eigenvalue());
  CHECK(ssf_finite(a, b, lo - 0.5) == 0);
  CHECK(ssf_finite(a, b, hi + 0.5) == 0);
  int tested = 0;
  for (int probe = 0; tested < 50 && probe < 500; ++probe) {
    const double lambda = rng.uniform(lo - 1.0, hi + 1.0);
    bool clear = true;
    for (double e : na.eigenvalues())
      if (std::abs(e - lambda) < 1e-6) clear = false;
    for (double e : nb.eigenvalues())
      if (std::abs(e - lambda) < 1e-6) clear = false;
    if (!clear) continue;
    ++tested;
    CHECK(ssf_finite(a, b, lambda) == xi_finite(a, b, lambda));
  }
  CHECK(tested == 50);
}

TEST_CASE("test functions: derivative metadata passes the finite-difference check") {
  for (const TestFunction& f : builtin_test_functions(-3.0, 3.0)) {
    INFO(f.name);
    // |phi' - central difference| <= C h^2 with h = 1e-4; the builtin family
    // has fourth derivatives of order one on this window.
    CHECK(f.derivative_defect(1e-4) < 1e-6);
  }
}

TEST_CASE("trace formula: B = A gives zero residual") {
  RandomStream rng(14, 8);
  const HermitianMatrix a = random_hermitian(8, rng);
  const std::vector<double> ev = eigvalsh(a);
  const TestFunction phi = gaussian_bump(0.0, std::max(std::abs(ev.front()), ev.back()));
  CHECK(trace_formula_residual(a, a, phi) == 0.0);
}

TEST_CASE("trace formula: 1x1 case is the fundamental theorem of calculus") {
  const HermitianMatrix a = HermitianMatrix::diagonal({0.0});
  const HermitianMatrix b = HermitianMatrix::diagonal({1.0});
  for (const TestFunction& phi : builtin_test_functions(-2.0, 3.0)) {
    INFO(phi.name);
    CHECK(trace_formula_residual(a, b, phi) <= 1e-10);
  }
}

TEST_CASE("trace formula: random 20x20 pair against the quadrature route") {
  RandomStream rng(15, 9);
  const HermitianMatrix a = random_hermitian(20, rng);
  ComplexMatrix bm = a.matrix();
  bm += random_rank_k(20, 3, rng).matrix();
  const HermitianMatrix b(bm, 1e-10);
  const std::vector<double> ea = eigvalsh(a);
  const std::vector<double> eb = eigvalsh(b);
  const double lo = std::min(ea.front(), eb.front()) - 0.5;
  const double hi = std::max(ea.back(), eb.back()) + 0.5;
  for (const TestFunction& phi : builtin_test_functions(lo, hi)) {
    INFO(phi.name);
    CHECK(trace_formula_residual(a, b, phi) <= 1e-6);
  }
}

TEST_CASE("trace formula: rejects insufficient support naming the range") {
  const HermitianMatrix a = HermitianMatrix::diagonal({-3.0, 5.0});
  const HermitianMatrix b = HermitianMatrix::diagonal({-2.0, 4.0});
  const TestFunction phi = smooth_bump(0.0, 1.0);
  CHECK_THROWS_WITH_AS(trace_formula_residual(a, b, phi),
                       doctest::Contains("does not cover"), std::invalid_argument);
  CHECK_THROWS_AS(
      trace_formula_residual(a, b, gaussian_bump(0.0, 2.0), 500),
      std::invalid_argument);
}

TEST_SUITE_END();
