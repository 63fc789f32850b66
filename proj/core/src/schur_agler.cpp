#include "lfball/schur_agler.hpp"

#include <algorithm>
#include <cmath>

#include "lfball/errors.hpp"

namespace lfball {

SpaceParams::SpaceParams(std::size_t m_, double beta_) : m(m_), beta(beta_) {
  if (m == 0) throw DimensionError("SpaceParams: dimension must be positive");
  if (!(beta >= 1.0) || !std::isfinite(beta)) {
    throw DomainError("SpaceParams: beta must be a finite number >= 1");
  }
}

cplx kbeta(const SpaceParams& params, const BallPoint& z, const BallPoint& w) {
  if (z.dim() != params.m || w.dim() != params.m) throw DimensionError("kbeta: dimension mismatch");
  const cplx base = 1.0 - inner(z.coords(), w.coords());
  if (base == 0.0) throw PoleError("kbeta: <z, w> = 1");
  return std::exp(-params.beta * std::log(base));
}

KernelGramReport gram_positivity(const Kernel& kernel, std::vector<BallPoint> points, double tol) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((points[i].coords() - points[j].coords()).norm() < 1e-6) {
        throw IllConditionedError("gram_positivity: points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are closer than 1e-6");
      }
    }
  }
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = kernel(points[i], points[j]);

  KernelGramReport report;
  report.gram = g.hermitian_part();
  report.min_eig = n == 0 ? 0.0 : hermitian_min_eig(report.gram);
  report.positive = report.min_eig >= -tol;
  report.tol = tol;
  report.points = std::move(points);
  return report;
}

NormBounds norm_bounds(const BallPoint& phi0, const SpaceParams& params) {
  const double r = phi0.norm();
  const double half = params.beta / 2.0;
  return {std::pow(1.0 / ((1.0 - r) * (1.0 + r)), half), std::pow((1.0 + r) / (1.0 - r), half),
          params.beta, r};
}

double gram_norm_lower_bound(const LinearFractionalMap& phi, const SpaceParams& params,
                             const std::vector<BallPoint>& points) {
  const std::size_t n = points.size();
  if (n == 0) throw DimensionError("gram_norm_lower_bound: empty point set");
  std::vector<BallPoint> images;
  images.reserve(n);
  for (const BallPoint& z : points) images.push_back(eval(phi, z));

  ComplexMatrix g(n, n), g_phi(n, n);
  double trace = 0.0;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = kbeta(params, points[i], points[j]);
      g_phi(i, j) = kbeta(params, images[i], images[j]);
    }
    trace += g(i, i).real();
    best = std::max(best, g_phi(i, i).real() / g(i, i).real());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((points[i].coords() - points[j].coords()).norm() < 1e-6) {
        throw IllConditionedError("gram_norm_lower_bound: repeated point");
      }
    }
  }
  ComplexMatrix ridged = g.hermitian_part();
  const double ridge = 1e-12 * trace;
  for (std::size_t i = 0; i < n; ++i) ridged(i, i) += ridge;
  double general = 0.0;
  try {
    general = generalized_max_eig(g_phi.hermitian_part(), ridged);
  } catch (const Error& e) {
    throw IllConditionedError(std::string("gram_norm_lower_bound: ") + e.what());
  }
  return std::sqrt(std::max(general, best));
}

std::vector<double> spectral_radius_from_log_defects(const std::vector<double>& log_defects,
                                                     double beta) {
  std::vector<double> s;
  for (std::size_t n = 1; n < log_defects.size(); ++n) {
    // 1 - |z| = (1 - |z|^2) / (1 + |z|)
    const double ld = log_defects[n];
    const double log_gap = ld - std::log1p(std::sqrt(-std::expm1(ld)));
    s.push_back(std::exp(-beta / (2.0 * static_cast<double>(n)) * log_gap));
  }
  return s;
}

std::vector<double> spectral_radius_sequence(const LinearFractionalMap& phi,
                                             const SpaceParams& params, std::size_t count,
                                             const ClassificationResult& kind) {
  if (count == 0) throw DomainError("spectral_radius_sequence: need at least one term");
  if (params.m != phi.dim()) throw DimensionError("spectral_radius_sequence: dimension mismatch");
  return spectral_radius_from_log_defects(origin_log_defects(phi, kind, count), params.beta);
}

std::vector<double> spectral_radius_sequence(const LinearFractionalMap& phi,
                                             const SpaceParams& params, std::size_t count) {
  return spectral_radius_sequence(phi, params, count, classify(phi));
}

double predicted_spectral_radius(const ClassificationResult& kind, double beta) {
  if (kind.kind != MapKind::hyperbolic) return 1.0;
  return std::pow(*kind.alpha, -beta / 2.0);
}

}  // namespace lfball
