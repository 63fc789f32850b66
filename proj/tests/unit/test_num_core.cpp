#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lfball/errors.hpp"
#include "lfball/num_core.hpp"
#include "lfball/sampling.hpp"

using namespace lfball;

namespace {

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix x = rng.complex_normal_matrix(n, n);
  return (x + x.adjoint()).hermitian_part();
}

}  // namespace

TEST_CASE("hermitian_min_eig on small matrices") {
  CHECK(hermitian_min_eig(ComplexMatrix::identity(2)) == doctest::Approx(1.0));
  CHECK(hermitian_min_eig(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}) == doctest::Approx(-1.0));
  // eigenvalues of [[2,1],[1,2]] are 1 and 3
  CHECK(std::abs(hermitian_min_eig(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}}) - 1.0) < 1e-12);
  CHECK_THROWS_AS(hermitian_min_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("hermitian eigenvalues agree with the trace and determinant") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(rng, 2);
    const double tr = (a(0, 0) + a(1, 1)).real();
    const double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    CHECK(std::abs(hermitian_min_eig(a) - (tr / 2.0 - disc)) < 1e-12 * (1.0 + std::abs(tr)));
  }
}

TEST_CASE("min eigenvalue shifts with the matrix") {
  Rng rng(11);
  for (std::size_t n : {3u, 6u, 12u}) {
    const ComplexMatrix a = random_hermitian(rng, n);
    const double s = rng.uniform(-3.0, 3.0);
    const double shifted = hermitian_min_eig(a + s * ComplexMatrix::identity(n));
    CHECK(std::abs(shifted - hermitian_min_eig(a) - s) < 1e-9);
  }
}

TEST_CASE("Jacobi eigendecomposition reconstructs the matrix") {
  Rng rng(3);
  for (std::size_t n : {1u, 4u, 9u, 20u}) {
    const ComplexMatrix a = random_hermitian(rng, n);
    const HermitianEigen e = hermitian_eigen(a);
    std::vector<cplx> diag(e.values.begin(), e.values.end());
    const ComplexMatrix back = e.vectors * ComplexMatrix::diagonal(diag) * e.vectors.adjoint();
    CHECK((back - a).frobenius_norm() < 1e-12 * (1.0 + a.frobenius_norm()));
    const std::vector<double> ql = hermitian_eigenvalues(a);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ql[k] - e.values[k]) < 1e-11 * (1.0 + a.frobenius_norm()));
  }
}

TEST_CASE("psd_factor") {
  const ComplexMatrix zero(3, 3);
  CHECK(psd_factor(zero, 1e-9).frobenius_norm() == 0.0);
  const ComplexMatrix x_id = psd_factor(ComplexMatrix::identity(3), 1e-9);
  CHECK((x_id.adjoint() * x_id - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
  const ComplexMatrix m{{4.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix x = psd_factor(m, 1e-9);
  CHECK((x.adjoint() * x - m).frobenius_norm() < 1e-10);

  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix g = rng.complex_normal_matrix(5, 3);
    const ComplexMatrix psd = g * g.adjoint();  // rank 3
    const double tol = 1e-9;
    const ComplexMatrix f = psd_factor(psd, tol);
    CHECK((f.adjoint() * f - psd).frobenius_norm() <= 10.0 * tol * std::max(1.0, psd.frobenius_norm()));
  }

  try {
    psd_factor(ComplexMatrix{{1.0, 0.0}, {0.0, -0.5}}, 1e-9);
    FAIL("expected NotPsdError");
  } catch (const NotPsdError& e) {
    CHECK(e.eigenvalue() == doctest::Approx(-0.5));
  }
  // negative eigenvalues inside the tolerance are clamped
  CHECK_NOTHROW(psd_factor(ComplexMatrix{{1.0, 0.0}, {0.0, -1e-11}}, 1e-9));
}

TEST_CASE("generalized_max_eig") {
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(generalized_max_eig(i2, i2) == doctest::Approx(1.0));
  CHECK(generalized_max_eig(2.0 * i2, i2) == doctest::Approx(2.0));
  CHECK(generalized_max_eig(ComplexMatrix{{3.0, 0.0}, {0.0, 1.0}}, ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}}) ==
        doctest::Approx(3.0));
  CHECK_THROWS_AS(generalized_max_eig(i2, ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}), Error);

  // Rayleigh quotients of random vectors never exceed the maximum
  Rng rng(9);
  const ComplexMatrix a = random_hermitian(rng, 4);
  const ComplexMatrix g = rng.complex_normal_matrix(4, 4);
  const ComplexMatrix b = g * g.adjoint() + ComplexMatrix::identity(4);
  const double top = generalized_max_eig(a, b);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexVector v = rng.complex_normal_vector(4);
    const double ratio = inner(a * v, v).real() / inner(b * v, v).real();
    CHECK(ratio <= top + 1e-12);
  }
}

TEST_CASE("mat_poly_eval") {
  Rng rng(13);
  const ComplexMatrix a = rng.complex_normal_matrix(3, 3);
  const std::vector<cplx> one{1.0};
  CHECK((mat_poly_eval(one, a) - ComplexMatrix::identity(3)).frobenius_norm() == 0.0);
  const std::vector<cplx> x{0.0, 1.0};
  CHECK((mat_poly_eval(x, a) - a).frobenius_norm() < 1e-15);
  const std::vector<cplx> onex{1.0, 1.0};
  CHECK(mat_poly_eval(onex, ComplexMatrix{{2.0}})(0, 0) == cplx(3.0));
  CHECK_THROWS_AS(mat_poly_eval(one, ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("mat_poly_eval respects polynomial products") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a = rng.complex_normal_matrix(4, 4);
    a *= rng.uniform(0.1, 1.0) / spectral_norm(a);
    std::vector<cplx> p(4), q(5), pq(8);
    for (auto& c : p) c = rng.complex_normal();
    for (auto& c : q) c = rng.complex_normal();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) pq[i + j] += p[i] * q[j];
    const ComplexMatrix lhs = mat_poly_eval(pq, a);
    const ComplexMatrix rhs = mat_poly_eval(p, a) * mat_poly_eval(q, a);
    CHECK((lhs - rhs).frobenius_norm() <= 1e-10 * lhs.frobenius_norm());
  }
}

TEST_CASE("general eigenvalues, solve, null space") {
  // companion-like matrix with known spectrum {1, 2, 3}
  const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<cplx>{1.0, 2.0, 3.0});
  Rng rng(19);
  const ComplexMatrix s = rng.complex_normal_matrix(3, 3) + 3.0 * ComplexMatrix::identity(3);
  // s d s^{-1} through column solves
  ComplexMatrix sinv(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const ComplexVector col = solve(s, ComplexVector::unit(3, j));
    for (std::size_t i = 0; i < 3; ++i) sinv(i, j) = col[i];
  }
  CHECK(((s * sinv) - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
  std::vector<cplx> ev = eigenvalues(s * d * sinv);
  std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(ev[k] - cplx(k + 1.0)) < 1e-10);

  const ComplexMatrix singular{{1.0, 2.0}, {2.0, 4.0}};
  CHECK_THROWS_AS(solve(singular, ComplexVector{1.0, 1.0}), IllConditionedError);
  const ComplexMatrix ns = null_space(singular, 1e-9);
  REQUIRE(ns.cols() == 1);
  CHECK((singular * ns.column(0)).norm() < 1e-12);
  CHECK(spectral_norm(ComplexMatrix{{3.0, 0.0}, {0.0, -4.0}}) == doctest::Approx(4.0));
}
