#include "lfball/ball_geometry.hpp"

#include <cmath>
#include <string>

#include "lfball/errors.hpp"

namespace lfball {

BallPoint::BallPoint(ComplexVector z) : z_(std::move(z)) {
  if (!z_.all_finite()) throw DomainError("BallPoint: non-finite coordinates");
  const double r = z_.norm();
  if (!(r <= 1.0 - kSphereMargin)) {
    throw DomainError("BallPoint: |z| = " + std::to_string(r) +
                      " is not inside the unit ball");
  }
}

BoundaryPoint::BoundaryPoint(ComplexVector zeta) : zeta_(std::move(zeta)) {
  if (!zeta_.all_finite()) throw DomainError("BoundaryPoint: non-finite coordinates");
  if (std::abs(zeta_.norm() - 1.0) > 1e-12) {
    throw DomainError("BoundaryPoint: |zeta| = " + std::to_string(zeta_.norm()) +
                      " is not on the unit sphere");
  }
}

BoundaryPoint BoundaryPoint::normalized(const ComplexVector& zeta) {
  const double r = zeta.norm();
  if (!(r > 0.0)) throw DomainError("BoundaryPoint::normalized: zero vector");
  return BoundaryPoint((1.0 / r) * zeta);
}

SiegelPoint::SiegelPoint(cplx w1, ComplexVector wprime, Closure closure)
    : w1_(w1), wprime_(std::move(wprime)), closure_(closure) {
  if (!std::isfinite(w1_.real()) || !std::isfinite(w1_.imag()) || !wprime_.all_finite()) {
    throw DomainError("SiegelPoint: non-finite coordinates");
  }
  const double h = height();
  const double slack = 1e-12 * std::max(1.0, std::abs(w1_.real()));
  const bool ok = closure_ == Closure::open ? h > 0.0 : h >= -slack;
  if (!ok) {
    throw DomainError("SiegelPoint: Re w1 - |w'|^2 = " + std::to_string(h) +
                      " outside the half-space");
  }
}

cplx ball_inner(const ComplexVector& z, const ComplexVector& w) { return inner(z, w); }

namespace {

SiegelPoint cayley_impl(const ComplexVector& z, SiegelPoint::Closure closure) {
  if (z.empty()) throw DimensionError("cayley: empty point");
  const cplx denom = 1.0 - z[0];
  if (std::abs(denom) == 0.0) {
    throw PoleError("cayley: z1 = 1 maps to the point at infinity");
  }
  ComplexVector wprime(z.size() - 1);
  for (std::size_t k = 1; k < z.size(); ++k) wprime[k - 1] = z[k] / denom;
  return SiegelPoint((1.0 + z[0]) / denom, std::move(wprime), closure);
}

}  // namespace

SiegelPoint cayley(const BallPoint& z) {
  return cayley_impl(z.coords(), SiegelPoint::Closure::open);
}

SiegelPoint cayley(const BoundaryPoint& zeta) {
  return cayley_impl(zeta.coords(), SiegelPoint::Closure::closed);
}

ComplexVector inverse_cayley_coords(cplx w1, const ComplexVector& wprime) {
  const cplx denom = w1 + 1.0;
  if (std::abs(denom) == 0.0) throw PoleError("inverse_cayley: w1 = -1");
  ComplexVector z(wprime.size() + 1);
  z[0] = (w1 - 1.0) / denom;
  for (std::size_t k = 0; k < wprime.size(); ++k) z[k + 1] = 2.0 * wprime[k] / denom;
  return z;
}

BallPoint inverse_cayley(const SiegelPoint& w) {
  return BallPoint(inverse_cayley_coords(w.w1(), w.wprime()));
}

double julia_quotient(const ComplexVector& z, double defect, const BoundaryPoint& zeta) {
  if (!(defect > 0.0)) throw DomainError("julia_quotient: point not inside the ball");
  return std::norm(1.0 - inner(z, zeta.coords())) / defect;
}

double julia_quotient(const BallPoint& z, const BoundaryPoint& zeta) {
  if (z.dim() != zeta.dim()) throw DimensionError("julia_quotient: dimension mismatch");
  return julia_quotient(z.coords(), z.defect(), zeta);
}

}  // namespace lfball
