#pragma once

// Points of the unit ball B^m, its boundary sphere, and the Siegel
// half-space H^m = { (w1, w') : Re w1 > |w'|^2 }, together with the
// generalized Cayley transform between them.

#include <cstddef>

#include "lfball/num_core.hpp"

namespace lfball {

/// Points closer than this to the unit sphere are not interior points.
inline constexpr double kSphereMargin = 1e-12;

/// A point z of the open unit ball, |z| <= 1 - kSphereMargin.
class BallPoint {
 public:
  explicit BallPoint(ComplexVector z);
  static BallPoint origin(std::size_t m) { return BallPoint(ComplexVector(m)); }

  std::size_t dim() const noexcept { return z_.size(); }
  const ComplexVector& coords() const noexcept { return z_; }
  const cplx& operator[](std::size_t i) const { return z_[i]; }
  double norm() const { return z_.norm(); }
  /// 1 - |z|^2
  double defect() const { return 1.0 - z_.squared_norm(); }

 private:
  ComplexVector z_;
};

/// A point zeta of the unit sphere, | |zeta| - 1 | <= 1e-12.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(ComplexVector zeta);
  /// zeta / |zeta|; throws DomainError for the zero vector.
  static BoundaryPoint normalized(const ComplexVector& zeta);

  std::size_t dim() const noexcept { return zeta_.size(); }
  const ComplexVector& coords() const noexcept { return zeta_; }
  const cplx& operator[](std::size_t i) const { return zeta_[i]; }

 private:
  ComplexVector zeta_;
};

/// (w1, w') with height Re w1 - |w'|^2 > 0, or >= 0 when constructed with
/// Closure::closed (boundary evaluations).
class SiegelPoint {
 public:
  enum class Closure { open, closed };

  SiegelPoint(cplx w1, ComplexVector wprime, Closure closure = Closure::open);

  /// Ambient dimension m (= 1 + length of w').
  std::size_t dim() const noexcept { return wprime_.size() + 1; }
  cplx w1() const noexcept { return w1_; }
  const ComplexVector& wprime() const noexcept { return wprime_; }
  Closure closure() const noexcept { return closure_; }
  /// Re w1 - |w'|^2
  double height() const { return w1_.real() - wprime_.squared_norm(); }

 private:
  cplx w1_;
  ComplexVector wprime_;
  Closure closure_;
};

/// sum z_k conj(w_k)
cplx ball_inner(const ComplexVector& z, const ComplexVector& w);

/// psi(z1, z') = ((1 + z1) / (1 - z1), z' / (1 - z1)).
SiegelPoint cayley(const BallPoint& z);
/// Boundary version; lands on the boundary of the half-space.
SiegelPoint cayley(const BoundaryPoint& zeta);

/// psi^{-1}(w1, w') = ((w1 - 1) / (w1 + 1), 2 w' / (w1 + 1)).
BallPoint inverse_cayley(const SiegelPoint& w);
/// Same formula without interior checks; used for boundary images.
ComplexVector inverse_cayley_coords(cplx w1, const ComplexVector& wprime);

/// |1 - <z, zeta>|^2 / (1 - |z|^2)
double julia_quotient(const BallPoint& z, const BoundaryPoint& zeta);
/// Same quotient with a caller-supplied (more accurate) 1 - |z|^2.
double julia_quotient(const ComplexVector& z, double defect, const BoundaryPoint& zeta);

}  // namespace lfball
