#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lfball/ball_geometry.hpp"
#include "lfball/bcd.hpp"
#include "lfball/lfm.hpp"

namespace lfball {

/// Orbit z_n = phi_n(start). Defects 1 - |z_n|^2 are propagated through the
/// kernel factorization, so they stay accurate close to the sphere. The
/// orbit stops early (truncated = true) once the next point can no longer
/// be represented as an interior point or its defect drops below 1e-15.
struct Orbit {
  std::vector<BallPoint> points;
  std::vector<double> defects;
  bool truncated = false;

  const BallPoint& start() const { return points.front(); }
  std::size_t steps() const { return points.size() - 1; }
};

inline constexpr double kOrbitDefectFloor = 1e-15;

/// Requires a validated map.
Orbit orbit(const LinearFractionalMap& phi, const BallPoint& start, std::size_t steps);

enum class MapKind { elliptic, parabolic, hyperbolic };
const char* to_string(MapKind kind);

struct ClassificationResult {
  MapKind kind;
  /// Interior fixed point (elliptic) or Denjoy-Wolff point on the sphere.
  ComplexVector dw_point;
  /// Dilatation coefficient at the Denjoy-Wolff point; empty for elliptic maps.
  std::optional<double> alpha;
  std::size_t orbit_steps = 0;  ///< iterations spent locating the boundary point
  bool degenerate_spectrum = false;

  BoundaryPoint boundary_point() const;  ///< DomainError for elliptic maps
};

inline constexpr double kParabolicTol = 1e-6;
inline constexpr std::size_t kClassifyMaxSteps = 100000;

ClassificationResult classify(const LinearFractionalMap& phi);

/// Radial limit of (1 - |phi(t zeta)|^2) / (1 - t^2), from t = 1 - 2^{-k},
/// k = 10..40, with one Richardson step. Throws InconclusiveError when the
/// last five extrapolants spread by more than 1e-6.
double dilatation_coefficient(const LinearFractionalMap& phi, const BoundaryPoint& zeta);

struct JuliaReport {
  std::size_t points = 0;
  std::size_t violations = 0;  ///< ratios above 1 + 1e-9
  double max_ratio = 0.0;      ///< max of Q(phi(z)) / (alpha Q(z))
};

JuliaReport julia_check(const LinearFractionalMap& phi, const BoundaryPoint& zeta, double alpha,
                        const std::vector<BallPoint>& points);

/// Q(phi_n(0), zeta) against alpha^n along an orbit from the origin.
struct IteratedJuliaReport {
  std::vector<double> quotients;  ///< Q(phi_n(0), zeta), n = 0..N
  std::size_t violations = 0;     ///< entries above alpha^n (1 + 1e-6)
  double max_ratio = 0.0;         ///< max of Q_n / alpha^n
};

IteratedJuliaReport iterated_julia_check(const Orbit& orbit, const BoundaryPoint& zeta,
                                         double alpha);
/// Same check on half-space iterates of the normal form (origin orbit),
/// where Q_n = alpha^n / (Re x_n - |y_n|^2).
IteratedJuliaReport iterated_julia_check(const std::vector<IterateData>& iterates, double alpha);

/// r_n = defects[n] / defects[n-1]
std::vector<double> defect_ratio_sequence(const Orbit& orbit);
std::vector<double> defect_ratio_sequence(const std::vector<IterateData>& iterates, double alpha);

struct RestrictednessReport {
  std::vector<double> special_seq;     ///< |Gamma - gamma|^2 / (1 - |gamma|^2)
  std::vector<double> restricted_seq;  ///< |zeta - gamma| / (1 - |gamma|^2)
  bool special_limit_zero = false;
  bool restricted_bounded = false;
};

RestrictednessReport restrictedness_report(const Orbit& orbit, const BoundaryPoint& zeta);
/// From half-space iterates, where the two quotients become |v|^2 / Re u and
/// |u + 1| / (2 Re u).
RestrictednessReport restrictedness_report(const std::vector<IterateData>& iterates, double alpha);

/// log(1 - |phi_n(0)|^2) for n = 0..steps. Elliptic maps are iterated in the
/// ball; non-elliptic maps are moved to their half-space normal form, where
/// the iterates can be followed far past the reach of ball coordinates.
/// Throws PrecisionExhaustedError if a ball orbit truncates.
std::vector<double> origin_log_defects(const LinearFractionalMap& phi,
                                       const ClassificationResult& kind, std::size_t steps);

}  // namespace lfball
