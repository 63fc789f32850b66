#include "random_maps.hpp"

#include <cmath>

namespace lfball::testing {

ComplexMatrix matrix_exp(const ComplexMatrix& g) {
  const std::size_t n = g.rows();
  int squarings = 0;
  double norm = g.frobenius_norm();
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const ComplexMatrix a = std::ldexp(1.0, -squarings) * g;
  ComplexMatrix term = ComplexMatrix::identity(n);
  ComplexMatrix sum = term;
  for (int k = 1; k <= 18; ++k) {
    term = (1.0 / k) * (term * a);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  const ComplexMatrix x = rng.complex_normal_matrix(n, n);
  return matrix_exp(x - x.adjoint());
}

ComplexMatrix random_j_unitary(Rng& rng, std::size_t m, double spread) {
  const ComplexMatrix p = rng.complex_normal_matrix(m, m);
  ComplexMatrix g(m + 1, m + 1);
  g.set_block(0, 0, p - p.adjoint());
  const ComplexVector b = spread * rng.complex_normal_vector(m);
  for (std::size_t i = 0; i < m; ++i) {
    g(i, m) = b[i];
    g(m, i) = std::conj(b[i]);
  }
  g(m, m) = cplx(0.0, rng.normal());
  return matrix_exp(g);
}

namespace {

ComplexMatrix scaled_to_norm(const ComplexMatrix& a, double target) {
  const double n = spectral_norm(a);
  return n > 0.0 ? (target / n) * a : a;
}

}  // namespace

LinearFractionalMap random_lfm(Rng& rng, std::size_t m) {
  ComplexMatrix k = ComplexMatrix::identity(m + 1);
  k.set_block(0, 0, scaled_to_norm(rng.complex_normal_matrix(m, m), rng.uniform(0.05, 0.6)));
  if (rng.uniform() < 0.5) {
    ComplexVector b0 = rng.complex_normal_vector(m);
    b0 *= rng.uniform(0.0, 0.3) / b0.norm();
    for (std::size_t i = 0; i < m; ++i) k(i, m) = b0[i];
  }
  const ComplexMatrix t = random_j_unitary(rng, m) * k * random_j_unitary(rng, m);
  return validated(LinearFractionalMap(t));
}

BCDMap random_bcd(Rng& rng, std::size_t m, bool parabolic) {
  const std::size_t k = m - 1;
  const double alpha = parabolic ? 1.0 : rng.uniform(0.1, 0.9);
  const ComplexMatrix a = scaled_to_norm(rng.complex_normal_matrix(k, k),
                                         rng.uniform(0.0, 0.95) * std::sqrt(alpha));
  const ComplexVector b = rng.complex_normal_vector(k);
  const ComplexVector d = rng.complex_normal_vector(k);

  // largest value of |Aw'+d|^2 - alpha|w'|^2 - alpha Re<w',b> over w'
  const HermitianEigen eig =
      hermitian_eigen((alpha * ComplexMatrix::identity(k) - a.adjoint() * a).hermitian_part());
  const ComplexVector h = 2.0 * (a.adjoint() * d) - alpha * b;
  double sup = d.squared_norm();
  for (std::size_t i = 0; i < k; ++i) {
    const double proj = std::abs(inner(h, eig.vectors.column(i)));
    sup += proj * proj / (4.0 * eig.values[i]);
  }
  const cplx c(sup / alpha + rng.uniform(0.0, 1.0), rng.normal());
  return BCDMap(alpha, c, b, d, a);
}

LinearFractionalMap random_nonelliptic(Rng& rng, std::size_t m, bool parabolic) {
  const LinearFractionalMap base = bcd_to_ball(random_bcd(rng, m, parabolic));
  ComplexMatrix u = ComplexMatrix::identity(m + 1);
  u.set_block(0, 0, random_unitary(rng, m));
  return validated(LinearFractionalMap(u * base.matrix() * u.adjoint()));
}

LinearFractionalMap disk_automorphism(double r, std::size_t m) {
  ComplexMatrix t = std::sqrt(1.0 - r * r) * ComplexMatrix::identity(m + 1);
  t(0, 0) = 1.0;
  t(m, m) = 1.0;
  t(0, m) = r;
  t(m, 0) = r;
  return validated(LinearFractionalMap(t));
}

LinearFractionalMap rotation_map(std::size_t m) {
  ComplexMatrix t = cplx(0.0, 1.0) * ComplexMatrix::identity(m + 1);
  t(m, m) = 1.0;
  return validated(LinearFractionalMap(t));
}

LinearFractionalMap parabolic_map() {
  return validated(LinearFractionalMap(ComplexMatrix{{1.0, 1.0}, {-1.0, 3.0}}));
}

}  // namespace lfball::testing
