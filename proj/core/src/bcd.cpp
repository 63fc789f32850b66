#include "lfball/bcd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lfball/errors.hpp"
#include "lfball/sampling.hpp"

namespace lfball {

namespace {

constexpr std::uint64_t kBcdSpotSeed = 0xbcd5eed;
constexpr double kOverflowLog = 690.7755278982137;  // log(1e300)

// Projective matrices of psi and psi^{-1} on homogeneous coordinates
// (z1, z', 1); their product is 2I.
ComplexMatrix cayley_matrix(std::size_t m) {
  ComplexMatrix p = ComplexMatrix::identity(m + 1);
  p(0, m) = 1.0;
  p(m, 0) = -1.0;
  return p;
}

ComplexMatrix inverse_cayley_matrix(std::size_t m) {
  ComplexMatrix p = 2.0 * ComplexMatrix::identity(m + 1);
  p(0, 0) = 1.0;
  p(0, m) = -1.0;
  p(m, 0) = 1.0;
  p(m, m) = 1.0;
  return p;
}

double quadratic_g(const BCDMap& map, const ComplexVector& w) {
  const double alpha = map.alpha();
  const ComplexVector image = map.a() * w + map.d();
  return image.squared_norm() - alpha * w.squared_norm() - alpha * inner(w, map.b()).real() -
         alpha * map.c().real();
}

std::vector<cplx> as_complex(const std::vector<double>& v) { return {v.begin(), v.end()}; }

// Householder-type unitary R with R zeta = e1.
ComplexMatrix rotation_to_e1(const ComplexVector& zeta) {
  const std::size_t m = zeta.size();
  const double r1 = std::abs(zeta[0]);
  const cplx phase = r1 > 0.0 ? zeta[0] / r1 : cplx(1.0);
  ComplexVector u = zeta;
  u[0] += phase;
  const double uu = u.squared_norm();
  ComplexMatrix h = ComplexMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h(i, j) -= 2.0 * u[i] * std::conj(u[j]) / uu;
  // h zeta = -phase e1
  return (-std::conj(phase)) * h;
}

}  // namespace

BCDMap::BCDMap(double alpha, cplx c, ComplexVector b, ComplexVector d, ComplexMatrix a)
    : alpha_(alpha), c_(c), b_(std::move(b)), d_(std::move(d)), a_(std::move(a)) {
  if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
    throw DomainError("BCDMap: alpha = " + std::to_string(alpha_) + " is not in (0, 1]");
  }
  if (d_.size() != b_.size() || a_.rows() != b_.size() || a_.cols() != b_.size()) {
    throw DimensionError("BCDMap: b, d and A must all have dimension m - 1");
  }
  if (!std::isfinite(c_.real()) || !std::isfinite(c_.imag()) || !b_.all_finite() ||
      !d_.all_finite() || !a_.all_finite()) {
    throw DomainError("BCDMap: non-finite data");
  }
}

ComplexMatrix BCDMap::affine_matrix() const {
  const std::size_t m = dim();
  ComplexMatrix f(m + 1, m + 1);
  f(0, 0) = 1.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    f(0, k + 1) = std::conj(b_[k]);
    f(k + 1, m) = d_[k];
  }
  f.set_block(1, 1, a_);
  f(0, m) = c_;
  f(m, m) = alpha_;
  return f;
}

SiegelPoint eval_bcd(const BCDMap& map, const SiegelPoint& w) {
  if (w.dim() != map.dim()) throw DimensionError("eval_bcd: dimension mismatch");
  const double inv = 1.0 / map.alpha();
  const cplx w1 = inv * (w.w1() + map.c() + inner(w.wprime(), map.b()));
  ComplexVector wprime = inv * (map.a() * w.wprime() + map.d());
  const double height = w1.real() - wprime.squared_norm();
  if (w.closure() == SiegelPoint::Closure::open && !(height > 0.0)) {
    throw ValidationError("eval_bcd: interior point mapped outside the open half-space");
  }
  return SiegelPoint(w1, std::move(wprime), w.closure());
}

BCDValidationReport validate_bcd(const BCDMap& map) {
  BCDValidationReport report;
  const std::size_t k = map.dim() - 1;
  const double alpha = map.alpha();
  report.a_norm = k == 0 ? 0.0 : spectral_norm(map.a());
  report.norm_ok = report.a_norm <= std::sqrt(alpha) + 1e-12;

  // g(w') = w'*(A*A - alpha I) w' + Re<w', 2A*d - alpha b> + |d|^2 - alpha Re c.
  double gmax = map.d().squared_norm() - alpha * map.c().real();
  if (k > 0) {
    const ComplexMatrix neg_q =
        alpha * ComplexMatrix::identity(k) - map.a().adjoint() * map.a();
    const ComplexVector h = 2.0 * (map.a().adjoint() * map.d()) - alpha * map.b();
    const HermitianEigen eig = hermitian_eigen(neg_q.hermitian_part());
    const double lam_tol = 1e-12 * std::max(1.0, alpha);
    const double h_tol = 1e-9 * std::max(1.0, h.norm());
    for (std::size_t i = 0; i < k; ++i) {
      const double lam = eig.values[i];
      const double proj = std::abs(inner(h, eig.vectors.column(i)));
      if (lam > lam_tol) {
        gmax += proj * proj / (4.0 * lam);
      } else if (lam < -lam_tol || proj > h_tol) {
        gmax = std::numeric_limits<double>::infinity();
        break;
      }
    }
  }
  report.quadratic_max = gmax;
  report.quadratic_ok = gmax <= 1e-9;

  Rng rng(kBcdSpotSeed);
  std::size_t failures = 0;
  report.spot_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kBcdSpotChecks; ++i) {
    ComplexVector w = rng.complex_normal_vector(k);
    w *= std::pow(10.0, rng.uniform(-2.0, 2.0));
    const double g = quadratic_g(map, w);
    report.spot_max = std::max(report.spot_max, g);
    const double scale = 1.0 + alpha * w.squared_norm() + (map.a() * w + map.d()).squared_norm();
    if (g > 1e-9 * scale) ++failures;
    ++report.spot_checks;
  }

  if (!report.norm_ok) {
    report.reason = "|A| = " + std::to_string(report.a_norm) + " exceeds sqrt(alpha) = " +
                    std::to_string(std::sqrt(alpha));
  } else if (!report.quadratic_ok) {
    report.reason = "half-space inequality alpha|w'|^2 + alpha Re<w',b> + alpha Re c >= "
                    "|Aw'+d|^2 fails (max excess " + std::to_string(gmax) + ")";
  } else if (failures > 0) {
    report.reason = "half-space inequality fails at " + std::to_string(failures) +
                    " sampled points";
  }
  report.valid = report.norm_ok && report.quadratic_ok && failures == 0;
  return report;
}

double beta_seq(double alpha, std::size_t n) {
  double beta = 1.0;
  for (std::size_t k = 0; k < n; ++k) beta = alpha * beta + 1.0;
  return beta;
}

std::pair<std::vector<double>, std::vector<double>> pq_coeffs(double alpha, std::size_t n) {
  std::vector<double> p(n + 1), q(n + 1);
  double beta = 1.0, power = 1.0;
  for (std::size_t j = 0; j <= n; ++j) {
    // beta_j and alpha^j sit at degree n - j
    p[n - j] = beta;
    q[n - j] = power;
    beta = alpha * beta + 1.0;
    power *= alpha;
  }
  return {std::move(p), std::move(q)};
}

double IterateData::log_ball_defect(double alpha) const {
  const double h = scaled_height();
  if (!(h > 0.0)) throw DomainError("iterate left the half-space");
  const double an = std::pow(alpha, static_cast<double>(n));
  return std::log(4.0) + static_cast<double>(n) * std::log(alpha) + std::log(h) -
         2.0 * std::log(std::abs(x + an));
}

namespace {

void fill_unscaled(IterateData& it, double alpha) {
  const double lg = -static_cast<double>(it.n) * std::log(alpha);
  if (lg > kOverflowLog) return;
  it.u = std::exp(lg) * it.x;
  it.v = std::exp(0.5 * lg) * it.y;
}

}  // namespace

IterateData closed_form_iterate(const BCDMap& map, std::size_t n) {
  if (n == 0) throw DomainError("closed_form_iterate: n must be at least 1");
  const double alpha = map.alpha();
  const std::size_t k = map.dim() - 1;

  IterateData it;
  it.n = n;
  it.x = 1.0 + beta_seq(alpha, n - 1) * map.c();
  if (n >= 2 && k > 0) {
    const auto coeffs = as_complex(pq_coeffs(alpha, n - 2).first);
    it.x += inner(mat_poly_eval(coeffs, map.a()) * map.d(), map.b());
  }

  // alpha^{-n/2} q_{n-1}(A) = sum_j alpha^{(n-j)/2 - 1} (A / sqrt(alpha))^j
  it.y = ComplexVector(k);
  if (k > 0) {
    std::vector<cplx> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) {
      coeffs[j] = std::pow(alpha, 0.5 * static_cast<double>(n - j) - 1.0);
    }
    const ComplexMatrix a_hat = (1.0 / std::sqrt(alpha)) * map.a();
    it.y = mat_poly_eval(coeffs, a_hat) * map.d();
  }
  fill_unscaled(it, alpha);
  return it;
}

std::vector<IterateData> direct_iterates(const BCDMap& map, std::size_t count) {
  const double alpha = map.alpha();
  const double root = std::sqrt(alpha);
  const std::size_t k = map.dim() - 1;
  std::vector<IterateData> out;
  out.reserve(count + 1);

  IterateData it;
  it.x = 1.0;
  it.y = ComplexVector(k);
  fill_unscaled(it, alpha);
  out.push_back(it);
  double half_power = 1.0 / root;  // alpha^{(n-1)/2}
  for (std::size_t n = 0; n < count; ++n) {
    const IterateData& prev = out.back();
    IterateData next;
    next.n = n + 1;
    const double full = half_power * half_power * alpha;  // alpha^n
    const double half = half_power * root;                // alpha^{n/2}
    next.x = prev.x + full * map.c() + half * inner(prev.y, map.b());
    next.y = (1.0 / root) * (map.a() * prev.y) + half_power * map.d();
    fill_unscaled(next, alpha);
    out.push_back(std::move(next));
    half_power *= root;
  }
  return out;
}

cplx x_limit(const BCDMap& map) {
  if (map.is_parabolic()) {
    throw DomainError("x_limit: the limit formula needs alpha < 1 (map is parabolic)");
  }
  const std::size_t k = map.dim() - 1;
  cplx correction = map.c();
  if (k > 0) {
    const ComplexMatrix shifted = ComplexMatrix::identity(k) - map.a();
    correction += inner(solve(shifted, map.d()), map.b());
  }
  return 1.0 + correction / (1.0 - map.alpha());
}

std::vector<double> restricted_defect_seq(const BCDMap& map, std::size_t count) {
  std::vector<double> t;
  t.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) t.push_back(closed_form_iterate(map, n).y.squared_norm());
  return t;
}

BCDMap counterexample_map(double alpha, std::size_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("counterexample_map: alpha must lie in (0, 1)");
  }
  if (m < 2) throw DimensionError("counterexample_map: m must be at least 2");
  const std::size_t k = m - 1;
  const double root = std::sqrt(alpha);
  ComplexVector d = ComplexVector::unit(k, 0);
  ComplexVector b = (2.0 / root) * d;
  return BCDMap(alpha, 1.0 / alpha, std::move(b), std::move(d),
                root * ComplexMatrix::identity(k));
}

LinearFractionalMap bcd_to_ball(const BCDMap& map) {
  const BCDValidationReport report = validate_bcd(map);
  if (!report.valid) throw ValidationError("bcd_to_ball: " + report.reason);
  const std::size_t m = map.dim();
  const ComplexMatrix t = inverse_cayley_matrix(m) * map.affine_matrix() * cayley_matrix(m);
  return validated(LinearFractionalMap(t));
}

HalfSpaceForm ball_to_bcd(const LinearFractionalMap& phi, const BoundaryPoint& zeta) {
  const std::size_t m = phi.dim();
  if (zeta.dim() != m) throw DimensionError("ball_to_bcd: dimension mismatch");
  const ComplexMatrix r = rotation_to_e1(zeta.coords());
  ComplexMatrix lift = ComplexMatrix::identity(m + 1);
  lift.set_block(0, 0, r);
  ComplexMatrix f = cayley_matrix(m) * lift * phi.matrix() * lift.adjoint() *
                    inverse_cayley_matrix(m);
  const cplx lead = f(0, 0);
  if (!(std::abs(lead) > 1e-14 * f.frobenius_norm())) {
    throw DomainError("ball_to_bcd: zeta is not a boundary fixed point of the map");
  }
  f *= 1.0 / lead;

  double stray = std::abs(f(m, m).imag());
  for (std::size_t i = 1; i <= m; ++i) stray = std::max(stray, std::abs(f(i, 0)));
  for (std::size_t j = 1; j < m; ++j) stray = std::max(stray, std::abs(f(m, j)));
  const double residual = stray / f.frobenius_norm();

  double alpha = f(m, m).real();
  if (alpha > 1.0 && alpha <= 1.0 + 1e-8) alpha = 1.0;
  const std::size_t k = m - 1;
  ComplexVector b(k), d(k);
  for (std::size_t j = 0; j < k; ++j) {
    b[j] = std::conj(f(0, j + 1));
    d[j] = f(j + 1, m);
  }
  return {BCDMap(alpha, f(0, m), std::move(b), std::move(d), f.block(1, 1, k, k)), r,
          residual};
}

}  // namespace lfball
