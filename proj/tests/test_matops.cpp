#include "rinv/matops.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "rinv/errors.hpp"
#include "test_support.hpp"

using namespace rinv;
using namespace testsupport;

namespace {

ColumnSet identity_columns(std::size_t n) { return ColumnSet(Matrix::identity(n)); }

}  // namespace

TEST_SUITE("matops") {
  TEST_CASE("eigendecomposition of diag(3,1) sorts ascending") {
    const double entries[] = {3.0, 1.0};
    const EigenDecomp ed = sym_eigen(SymMatrix::diagonal(entries));
    CHECK(ed.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ed.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(ed.eigenvectors(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(ed.eigenvectors(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("eigendecomposition of the identity") {
    const EigenDecomp ed = sym_eigen(SymMatrix::identity(4));
    for (double lambda : ed.eigenvalues) CHECK(lambda == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("eigendecomposition of the 2x2 swap matrix") {
    SymMatrix s(2);
    s.set(0, 1, 1.0);
    const EigenDecomp ed = sym_eigen(s);
    CHECK(ed.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ed.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("reconstruction and orthonormality on random symmetric matrices") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t d = 1 + rng() % 8;
      const SymMatrix s = random_symmetric(d, rng, uniform(rng, 0.1, 10.0));
      const EigenDecomp ed = sym_eigen(s);

      const Matrix q = ed.eigenvectors;
      const Matrix qtq = multiply(transpose(q), q);
      double orth_err = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          orth_err = std::max(orth_err, std::abs(qtq(i, j) - (i == j ? 1.0 : 0.0)));
      CHECK(orth_err <= 1e-10);

      const SymMatrix back = sym_with_spectrum(q, ed.eigenvalues);
      CHECK(max_abs_diff(back, s) <= 1e-10 * std::max(1.0, s.max_norm()));

      for (std::size_t i = 0; i + 1 < d; ++i) CHECK(ed.eigenvalues[i] <= ed.eigenvalues[i + 1]);
    }
  }

  TEST_CASE("shifted inverse of the zero matrix is -I/b") {
    const SymMatrix m = shifted_inverse(SymMatrix::zero(3), 0.5);
    CHECK(max_abs_diff(m, scale(SymMatrix::identity(3), -2.0)) <= 1e-12);
  }

  TEST_CASE("shifted inverse of diag(1,0) at b = 0.5") {
    const double entries[] = {1.0, 0.0};
    const SymMatrix m = shifted_inverse(SymMatrix::diagonal(entries), 0.5);
    CHECK(m(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m(1, 1) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(m(0, 1)) <= 1e-12);
  }

  TEST_CASE("shifted inverse satisfies the residual identity") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 2 + rng() % 5;
      std::vector<double> eigs(d);
      for (double& e : eigs) e = uniform(rng, 0.6, 3.0);  // gap from b = 0.3
      const SymMatrix a = sym_with_spectrum(random_orthogonal(d, rng), eigs);
      const SymMatrix m = shifted_inverse(a, 0.3);

      SymMatrix shifted = a;
      shifted.add_scaled_identity(-0.3);
      const Matrix prod = multiply(shifted.to_matrix(), m.to_matrix());
      double err = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          err = std::max(err, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
      CHECK(err <= 1e-9);
    }
  }

  TEST_CASE("shifted inverse refuses a barrier on an eigenvalue") {
    const double entries[] = {1.0, 0.5};
    CHECK_THROWS_AS(shifted_inverse(SymMatrix::diagonal(entries), 0.5), BarrierCollisionError);
    try {
      shifted_inverse(SymMatrix::diagonal(entries), 0.5 + 1e-10);
      FAIL("expected a collision");
    } catch (const BarrierCollisionError& e) {
      CHECK(e.eigenvalue() == doctest::Approx(0.5).epsilon(1e-9));
      CHECK(e.barrier() == doctest::Approx(0.5).epsilon(1e-9));
    }
  }

  TEST_CASE("quadratic form basics") {
    CHECK(quad_form(SymMatrix::identity(3), std::vector<double>{1, 0, 0}) == doctest::Approx(1.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(quad_form(scale(SymMatrix::identity(2), -2.0),
                    std::vector<double>{inv_sqrt2, inv_sqrt2}) ==
          doctest::Approx(-2.0).epsilon(1e-14));
    CHECK_THROWS_AS(quad_form(SymMatrix::identity(2), std::vector<double>{1.0}), DimensionError);
  }

  TEST_CASE("quadratic form equals the brute-force double sum") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t d = 1 + rng() % 7;
      const SymMatrix m = random_symmetric(d, rng);
      const std::vector<double> u = random_unit_vector(d, rng);
      CHECK(quad_form(m, u) == doctest::Approx(quad_form_brute(m, u)).epsilon(1e-12));
    }
  }

  TEST_CASE("squared operator norm of orthonormal columns is 1") {
    CHECK(op_norm_sq(identity_columns(5)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("squared operator norm of a repeated column is 2") {
    Matrix m(3, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 1.0;
    CHECK(op_norm_sq(ColumnSet(m)) == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("squared operator norm matches the Gram spectrum") {
    std::mt19937_64 rng(404);
    const Matrix m = random_unit_columns(4, 8, rng);
    const ColumnSet u(m);

    // independent oracle: largest eigenvalue of the 8x8 Gram matrix U^T U
    const Matrix g = multiply(transpose(m), m);
    const EigenDecomp ed = sym_eigen(SymMatrix::from_matrix(g));
    CHECK(op_norm_sq(u) == doctest::Approx(ed.eigenvalues.back()).epsilon(1e-10));
    CHECK(op_norm_sq(u) >= 1.0 - 1e-12);
    CHECK(op_norm_sq(u) <= 8.0 + 1e-12);
  }

  TEST_CASE("rank-one update on the identity") {
    const std::vector<double> e1{1.0, 0.0};
    const SymMatrix out = sherman_morrison_update(SymMatrix::identity(2), e1);
    CHECK(out(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(out(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(out(0, 1)) <= 1e-14);
  }

  TEST_CASE("rank-one update with the zero vector is a no-op") {
    const std::vector<double> w{0.0, 0.0};
    CHECK(max_abs_diff(sherman_morrison_update(SymMatrix::identity(2), w),
                       SymMatrix::identity(2)) == 0.0);
  }

  TEST_CASE("rank-one update agrees with the direct shifted inverse") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 2 + rng() % 5;
      std::vector<double> eigs(d);
      for (double& e : eigs) e = uniform(rng, 0.0, 2.0);
      const SymMatrix a = sym_with_spectrum(random_orthogonal(d, rng), eigs);
      const double bprime = -0.4;
      const std::vector<double> w = random_unit_vector(d, rng);

      const SymMatrix via_update = sherman_morrison_update(shifted_inverse(a, bprime), w);
      SymMatrix bumped = a;
      bumped.add_outer(w);
      const SymMatrix direct = shifted_inverse(bumped, bprime);
      CHECK(max_abs_diff(via_update, direct) <= 1e-8 * std::max(1.0, direct.max_norm()));
    }
  }

  TEST_CASE("rank-one update refuses a vanishing denominator") {
    // (0 - 1I)^{-1} = -I, so 1 + w^T M w = 0 for any unit w
    const SymMatrix m = shifted_inverse(SymMatrix::zero(2), 1.0);
    const std::vector<double> w{1.0, 0.0};
    CHECK_THROWS_AS(sherman_morrison_update(m, w), SingularUpdateError);
  }

  TEST_CASE("gram of orthonormal columns is the identity") {
    const std::vector<std::size_t> s{0, 2, 3};
    CHECK(max_abs_diff(gram(identity_columns(5), s), SymMatrix::identity(3)) == 0.0);
  }

  TEST_CASE("gram of a pair at cosine 0.6") {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.6;
    m(1, 1) = 0.8;
    const std::vector<std::size_t> s{0, 1};
    const SymMatrix g = gram(ColumnSet(m), s);
    CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g(0, 1) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(g(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("gram spectrum equals the frame operator spectrum") {
    std::mt19937_64 rng(606);
    const ColumnSet u(random_unit_columns(5, 9, rng));
    const std::vector<std::size_t> s{1, 4, 7};

    SymMatrix frame(5);
    for (std::size_t j : s) frame.add_outer(u.column(j));
    const auto frame_eigs = sym_eigen(frame).eigenvalues;  // 2 zeros + 3 nonzero
    const auto gram_eigs = sym_eigen(gram(u, s)).eigenvalues;
    REQUIRE(frame_eigs.size() == 5);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(gram_eigs[i] == doctest::Approx(frame_eigs[i + 2]).epsilon(1e-9));
  }

  TEST_CASE("gram rejects duplicate and out-of-range indices") {
    const ColumnSet u = identity_columns(3);
    CHECK_THROWS_AS(gram(u, std::vector<std::size_t>{0, 0}), DimensionError);
    CHECK_THROWS_AS(gram(u, std::vector<std::size_t>{0, 5}), DimensionError);
  }
}
