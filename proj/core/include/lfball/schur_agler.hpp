#pragma once

// The weighted Hardy scale H^2_{m,beta} with kernel (1 - <z,w>)^{-beta},
// kernel positivity on finite samples, and norm/spectral-radius estimates for
// composition operators C_phi.

#include <cstddef>
#include <functional>
#include <vector>

#include "lfball/ball_geometry.hpp"
#include "lfball/dynamics.hpp"
#include "lfball/lfm.hpp"
#include "lfball/num_core.hpp"

namespace lfball {

struct SpaceParams {
  std::size_t m;
  double beta;

  /// DomainError unless beta >= 1; DimensionError for m = 0.
  SpaceParams(std::size_t m, double beta);

  static SpaceParams drury_arveson(std::size_t m) { return {m, 1.0}; }
  static SpaceParams hardy(std::size_t m) { return {m, static_cast<double>(m)}; }
  static SpaceParams bergman(std::size_t m) { return {m, static_cast<double>(m) + 1.0}; }
};

/// (1 - <z,w>)^{-beta}, principal branch.
cplx kbeta(const SpaceParams& params, const BallPoint& z, const BallPoint& w);

using Kernel = std::function<cplx(const BallPoint&, const BallPoint&)>;

struct KernelGramReport {
  std::vector<BallPoint> points;
  ComplexMatrix gram;  ///< Hermitian part of [K(z_i, z_j)]
  double min_eig = 0.0;
  bool positive = false;
  double tol = kDefaultTol;
};

/// Gram matrix of the kernel on the points and its smallest eigenvalue.
/// IllConditionedError when two points are closer than 1e-6.
KernelGramReport gram_positivity(const Kernel& kernel, std::vector<BallPoint> points,
                                 double tol = kDefaultTol);

struct NormBounds {
  double lower;  ///< (1 / (1 - |phi(0)|^2))^{beta/2}
  double upper;  ///< ((1 + |phi(0)|) / (1 - |phi(0)|))^{beta/2}
  double beta;
  double phi0_norm;
};

NormBounds norm_bounds(const BallPoint& phi0, const SpaceParams& params);

/// Lower bound for |C_phi| on H^2_{m,beta} from the action of C_phi* on the
/// span of the kernel functions at the points: the square root of the
/// largest generalized eigenvalue of ([k(phi z_i, phi z_j)], [k(z_i, z_j)]),
/// never below the single-kernel ratios k(phi z, phi z) / k(z, z).
double gram_norm_lower_bound(const LinearFractionalMap& phi, const SpaceParams& params,
                             const std::vector<BallPoint>& points);

/// s_n = (1 - |phi_n(0)|)^{-beta/(2n)} for n = 1..count.
std::vector<double> spectral_radius_sequence(const LinearFractionalMap& phi,
                                             const SpaceParams& params, std::size_t count);
std::vector<double> spectral_radius_sequence(const LinearFractionalMap& phi,
                                             const SpaceParams& params, std::size_t count,
                                             const ClassificationResult& kind);
/// Same values from log(1 - |phi_n(0)|^2), n = 0..count.
std::vector<double> spectral_radius_from_log_defects(const std::vector<double>& log_defects,
                                                     double beta);

/// 1 for elliptic and parabolic maps, alpha^{-beta/2} for hyperbolic ones.
double predicted_spectral_radius(const ClassificationResult& kind, double beta);

}  // namespace lfball
