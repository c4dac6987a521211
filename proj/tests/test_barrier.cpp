#include "rinv/barrier.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "rinv/errors.hpp"
#include "test_support.hpp"

using namespace rinv;
using namespace testsupport;

namespace {

ColumnSet identity_columns(std::size_t n) { return ColumnSet(Matrix::identity(n)); }

// PSD matrix whose nonzero eigenvalues all lie in [lo, hi], with `zeros`
// kernel dimensions.
SymMatrix psd_above(std::size_t d, std::size_t zeros, double lo, double hi,
                    std::mt19937_64& rng) {
  std::vector<double> eigs(d, 0.0);
  for (std::size_t i = zeros; i < d; ++i) eigs[i] = uniform(rng, lo, hi);
  return sym_with_spectrum(random_orthogonal(d, rng), eigs);
}

}  // namespace

TEST_SUITE("barrier") {
  TEST_CASE("potential of the empty frame is -n/b") {
    const PotentialReport rep = potential(identity_columns(2), SymMatrix::zero(2), 0.5);
    CHECK(rep.value == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(rep.barrier == 0.5);

    std::mt19937_64 rng(21);
    const ColumnSet u(random_unit_columns(3, 5, rng));
    // b = 1 - 2*0.25 = 1/2 gives -n/b = -2n for any unit-column system
    CHECK(potential(u, SymMatrix::zero(3), 0.5).value == doctest::Approx(-10.0).epsilon(1e-12));
  }

  TEST_CASE("potential splits into per-column terms") {
    std::mt19937_64 rng(22);
    const ColumnSet u(random_unit_columns(4, 7, rng));
    const SymMatrix a = psd_above(4, 2, 0.8, 2.0, rng);
    const PotentialReport rep = potential(u, a, 0.5);
    double sum = 0.0;
    for (double term : rep.per_column) sum += term;
    CHECK(rep.value == doctest::Approx(sum).epsilon(1e-14));
    REQUIRE(rep.per_column.size() == 7);
  }

  TEST_CASE("potential on a rank-one frame operator, hand value") {
    SymMatrix a(2);
    a.set(0, 0, 1.0);  // e1 e1^T
    // phi = 1/(1-0.5) + 1/(0-0.5) = 2 - 2 = 0
    CHECK(potential(identity_columns(2), a, 0.5).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("trace identity: column sums equal the trace of U^T M U") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t d = 2 + rng() % 6;
      const std::size_t n = 1 + rng() % 12;
      const ColumnSet u(random_unit_columns(d, n, rng));
      const SymMatrix m = random_symmetric(d, rng);

      double column_sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) column_sum += quad_form_brute(m, u.column(j));

      const Matrix um = u.to_matrix();
      const Matrix g2 = multiply(transpose(um), multiply(m.to_matrix(), um));
      double trace = 0.0;
      for (std::size_t j = 0; j < n; ++j) trace += g2(j, j);

      CHECK(std::abs(column_sum - trace) <=
            1e-10 * static_cast<double>(n) * std::max(1.0, m.max_norm()));
    }
  }

  TEST_CASE("step-one margin on the zero matrix, scalar value") {
    // d=1, A=0, b=0.5, delta=0.2: -1/b + 1/b' - delta/(2 b'^2)
    //   = -2 + 10/3 - 0.1/0.09 = 2/9
    const double margin = check_step1(SymMatrix::zero(1), 0.5, 0.2);
    CHECK(margin == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
  }

  TEST_CASE("step-one margin on diag(1,0)") {
    const double entries[] = {1.0, 0.0};
    const SymMatrix a = SymMatrix::diagonal(entries);
    const double margin = check_step1(a, 0.5, 0.2);
    // scalar oracle: min over lambda in {1, 0} of
    //   1/(l-b) - 1/(l-b') - (delta/2)/(l-b')^2
    const double at_one = 1.0 / 0.5 - 1.0 / 0.7 - 0.1 / 0.49;
    const double at_zero = -2.0 + 10.0 / 3.0 - 0.1 / 0.09;
    CHECK(margin == doctest::Approx(std::min(at_one, at_zero)).epsilon(1e-10));
    CHECK(margin >= 0.0);
  }

  TEST_CASE("step-one margin at the boundary delta = b'") {
    // b = 0.5, delta = 0.25 = b': scalar value at lambda = 0 is
    // -2 + 4 - 0.125/0.0625 = 0 exactly
    const double margin = check_step1(SymMatrix::zero(1), 0.5, 0.25);
    CHECK(margin >= -1e-10);
    CHECK(margin <= 1e-10);
  }

  TEST_CASE("step-one margin is nonnegative on random instances") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t d = 1 + rng() % 6;
      const double b = uniform(rng, 0.2, 1.0);
      const double delta = uniform(rng, 0.01, 0.5) * b;  // delta <= b/2
      const std::size_t zeros = rng() % (d + 1);
      const SymMatrix a = psd_above(d, zeros, b + 0.05, b + 3.0, rng);
      CHECK(check_step1(a, b, delta) >= -1e-10);
    }
  }

  TEST_CASE("step-one precondition failures are reported") {
    CHECK_THROWS_AS(check_step1(SymMatrix::zero(2), 0.5, 0.0), PreconditionError);
    CHECK_THROWS_AS(check_step1(SymMatrix::zero(2), 0.5, 0.3), PreconditionError);  // b' < delta
    const double entries[] = {0.3, 0.0};
    CHECK_THROWS_AS(check_step1(SymMatrix::diagonal(entries), 0.5, 0.2),
                    PreconditionError);  // nonzero eigenvalue below b
  }

  TEST_CASE("step-two potentials on the empty frame") {
    const StepPotentials pots = check_step2(identity_columns(2), SymMatrix::zero(2), 0.5, 0.1);
    CHECK(pots.phi_b == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(pots.phi_bprime == doctest::Approx(-5.0).epsilon(1e-12));
  }

  TEST_CASE("step-two potentials on diag(1,0)") {
    SymMatrix a(2);
    a.set(0, 0, 1.0);
    const StepPotentials pots = check_step2(identity_columns(2), a, 0.5, 0.1);
    CHECK(pots.phi_b == doctest::Approx(0.0).epsilon(1e-12));
    // 1/0.6 - 1/0.4 = -5/6
    CHECK(pots.phi_bprime == doctest::Approx(-5.0 / 6.0).epsilon(1e-12));
    CHECK(pots.phi_bprime <= pots.phi_b + 1e-10);
  }

  TEST_CASE("lowering the barrier never raises the potential") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t d = 2 + rng() % 5;
      const std::size_t n = d + rng() % 6;
      const ColumnSet u(random_unit_columns(d, n, rng));
      const double b = uniform(rng, 0.2, 0.8);
      const double delta = uniform(rng, 0.05, 0.5) * b;
      const SymMatrix a = psd_above(d, rng() % d, b + 0.05, b + 2.0, rng);
      const StepPotentials pots = check_step2(u, a, b, delta);
      CHECK(pots.phi_bprime <= pots.phi_b + 1e-10);
    }
  }

  TEST_CASE("step-three closed form on the empty frame") {
    // n = d = 10, epsilon = 0.25 schedule: b = 0.5, delta = 0.2, b' = 0.3.
    // lhs = n/b'^2 = 1000/9, rhs = (-n/b + n/b') (-n + n/b') = (40/3)(70/3)
    const Step3Bound bound = check_step3(identity_columns(10), SymMatrix::zero(10), 0.5, 0.2);
    CHECK(bound.lhs == doctest::Approx(1000.0 / 9.0).epsilon(1e-10));
    CHECK(bound.rhs == doctest::Approx(2800.0 / 9.0).epsilon(1e-10));
    CHECK(bound.lhs <= bound.rhs + 1e-9 * std::abs(bound.rhs));
  }

  TEST_CASE("step-three lhs equals the column-sum form") {
    // near-orthonormal columns keep the operator norm close to 1, so the
    // potential hypothesis at (b, delta) = (0.5, 0.24) holds for A = 0:
    // -n/b' = -38.46 <= -n - 2*opnorm^2/delta
    std::mt19937_64 rng(26);
    const std::size_t n = 10;
    const Matrix q = random_orthogonal(n, rng);
    Matrix perturbed(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) perturbed(i, j) = q(i, j) + 0.08 * gaussian(rng);
    const ColumnSet u(normalize_columns(perturbed));
    const double b = 0.5;
    const double delta = 0.24;
    const SymMatrix a = SymMatrix::zero(n);

    const double phi_bp = potential(u, a, b - delta).value;
    REQUIRE(phi_bp <= -static_cast<double>(n) - 2.0 * op_norm_sq(u) / delta);

    const Step3Bound bound = check_step3(u, a, b, delta);
    const SymMatrix m = shifted_inverse(a, b - delta);
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // || U^T M u_j ||^2
      const std::vector<double> mu = multiply(m, u.column(j));
      for (std::size_t i = 0; i < n; ++i) {
        const double entry = dot(u.column(i), mu);
        lhs += entry * entry;
      }
    }
    CHECK(bound.lhs == doctest::Approx(lhs).epsilon(1e-10));
    CHECK(bound.lhs <= bound.rhs + 1e-9 * std::abs(bound.rhs));
  }

  TEST_CASE("step-three rejects a state violating the potential hypothesis") {
    // A = 0, n = 10, b = 0.5, delta = 0.01: phi_b' = -10/0.49 but the bound
    // is -10 - 200, far below
    CHECK_THROWS_AS(check_step3(identity_columns(10), SymMatrix::zero(10), 0.5, 0.01),
                    PreconditionError);
  }
}
