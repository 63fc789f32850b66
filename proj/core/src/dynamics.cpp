#include "lfball/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lfball/errors.hpp"

namespace lfball {

Orbit orbit(const LinearFractionalMap& phi, const BallPoint& start, std::size_t steps) {
  if (start.dim() != phi.dim()) throw DimensionError("orbit: dimension mismatch");
  phi.factorization();  // validated maps only

  Orbit out;
  out.points.reserve(steps + 1);
  out.defects.reserve(steps + 1);
  out.points.push_back(start);
  out.defects.push_back(start.defect());
  for (std::size_t n = 0; n < steps; ++n) {
    const ComplexVector& z = out.points.back().coords();
    const double defect = image_defect(phi, z, out.defects.back());
    if (defect < kOrbitDefectFloor) {
      out.truncated = true;
      break;
    }
    ComplexVector image = apply(phi, z);
    if (!(image.norm() <= 1.0 - kSphereMargin)) {
      out.truncated = true;
      break;
    }
    out.points.emplace_back(std::move(image));
    out.defects.push_back(defect);
  }
  return out;
}

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::elliptic: return "elliptic";
    case MapKind::parabolic: return "parabolic";
    case MapKind::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

BoundaryPoint ClassificationResult::boundary_point() const {
  if (kind == MapKind::elliptic) {
    throw DomainError("elliptic maps have an interior fixed point, not a boundary point");
  }
  return BoundaryPoint::normalized(dw_point);
}

ClassificationResult classify(const LinearFractionalMap& phi) {
  phi.factorization();
  const std::size_t m = phi.dim();
  const FixedPointSet fps = fixed_points(phi);

  ClassificationResult result{MapKind::elliptic, ComplexVector(m), std::nullopt, 0,
                              fps.degenerate};
  for (const FixedPoint& p : fps.points) {
    if (p.location == FixedPointLocation::interior) {
      result.dw_point = p.point;
      return result;
    }
  }

  ComplexVector z(m);
  double defect = 1.0;
  bool converged = false;
  std::size_t n = 0;
  for (; n < kClassifyMaxSteps; ++n) {
    const double next_defect = image_defect(phi, z, defect);
    ComplexVector next = apply(phi, z);
    if (!(next.norm() <= 1.0 - kSphereMargin)) {
      converged = true;
      break;
    }
    z = std::move(next);
    defect = next_defect;
    if (defect / (1.0 + z.norm()) < 1e-10) {
      converged = true;
      ++n;
      break;
    }
  }
  result.orbit_steps = n;

  const double r = z.norm();
  if (!(r > 0.0)) throw InconclusiveError("classify: orbit of the origin does not move");
  const ComplexVector estimate = (1.0 / r) * z;

  std::optional<ComplexVector> polished;
  if (auto p = nearest_fixed_point(phi, estimate)) {
    if ((*p - estimate).norm() <= 0.1 && std::abs(p->norm() - 1.0) <= 1e-6) polished = *p;
  }
  if (polished) {
    result.dw_point = (1.0 / polished->norm()) * *polished;
  } else if (converged) {
    result.dw_point = estimate;
  } else {
    throw InconclusiveError("classify: orbit of the origin reached 1 - |z| = " +
                            std::to_string(defect / (1.0 + r)) + " after " +
                            std::to_string(n) +
                            " steps with no boundary fixed point near its direction");
  }

  const double alpha = dilatation_coefficient(phi, BoundaryPoint::normalized(result.dw_point));
  result.alpha = alpha;
  result.kind = alpha >= 1.0 - kParabolicTol ? MapKind::parabolic : MapKind::hyperbolic;
  return result;
}

namespace {

// Radial quotient (1 - |phi(t zeta)|^2) / (1 - t^2). Along the radius the
// numerator is |t c + D|^2 - |t a + B|^2 with a = A zeta, c = <zeta, C>, a
// real quadratic N(t) = p t^2 + 2 s t + r. When |phi(zeta)| = 1, N(1) = 0 and
// N(t) / (1 - t^2) = -p - 2 s / (1 + t) exactly.
class RadialQuotient {
 public:
  RadialQuotient(const LinearFractionalMap& phi, const BoundaryPoint& zeta)
      : phi_(phi), zeta_(zeta) {
    const ComplexVector a = phi.a_block() * zeta.coords();
    const ComplexVector b = phi.b_block();
    c_ = inner(zeta.coords(), phi.c_block());
    d_ = phi.d_block();
    p_ = std::norm(c_) - a.squared_norm();
    s_ = (c_ * std::conj(d_)).real() - inner(a, b).real();
    const double r = std::norm(d_) - b.squared_norm();
    const double scale = std::norm(c_) + a.squared_norm() + std::norm(d_) + b.squared_norm();
    on_sphere_ = std::abs(p_ + 2.0 * s_ + r) <= 1e-10 * scale;
  }

  double operator()(double h) const {
    const double t = 1.0 - h;
    const double radial_defect = h * (2.0 - h);  // 1 - t^2, exact
    if (on_sphere_) return (-p_ - 2.0 * s_ / (1.0 + t)) / std::norm(t * c_ + d_);
    const ComplexVector z = t * zeta_.coords();
    return image_defect(phi_, z, radial_defect) / radial_defect;
  }

 private:
  const LinearFractionalMap& phi_;
  const BoundaryPoint& zeta_;
  cplx c_, d_;
  double p_ = 0.0, s_ = 0.0;
  bool on_sphere_ = false;
};

}  // namespace

double dilatation_coefficient(const LinearFractionalMap& phi, const BoundaryPoint& zeta) {
  if (zeta.dim() != phi.dim()) throw DimensionError("dilatation_coefficient: dimension mismatch");
  phi.factorization();

  constexpr int kFirst = 10, kLast = 40;
  const RadialQuotient quotient(phi, zeta);
  std::vector<double> q;
  for (int k = kFirst; k <= kLast + 1; ++k) q.push_back(quotient(std::ldexp(1.0, -k)));
  std::vector<double> extrapolated;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) extrapolated.push_back(2.0 * q[i + 1] - q[i]);

  const auto tail = extrapolated.end() - 5;
  const auto [lo, hi] = std::minmax_element(tail, extrapolated.end());
  if (*hi - *lo > 1e-6) {
    throw InconclusiveError("dilatation_coefficient: radial quotients spread by " +
                            std::to_string(*hi - *lo) + " over the last five estimates");
  }
  const double alpha = extrapolated.back();
  if (!(alpha > 0.0)) {
    throw InconclusiveError("dilatation_coefficient: radial limit is not positive");
  }
  return std::min(alpha, 1.0);
}

JuliaReport julia_check(const LinearFractionalMap& phi, const BoundaryPoint& zeta, double alpha,
                        const std::vector<BallPoint>& points) {
  JuliaReport report;
  for (const BallPoint& z : points) {
    const ComplexVector w = apply(phi, z.coords());
    const double w_defect = image_defect(phi, z.coords(), z.defect());
    const double ratio =
        julia_quotient(w, w_defect, zeta) / (alpha * julia_quotient(z, zeta));
    report.max_ratio = std::max(report.max_ratio, ratio);
    if (ratio > 1.0 + 1e-9) ++report.violations;
    ++report.points;
  }
  return report;
}

IteratedJuliaReport iterated_julia_check(const Orbit& orbit, const BoundaryPoint& zeta,
                                         double alpha) {
  IteratedJuliaReport report;
  for (std::size_t n = 0; n < orbit.points.size(); ++n) {
    const double q = julia_quotient(orbit.points[n].coords(), orbit.defects[n], zeta);
    const double ratio = q / std::pow(alpha, static_cast<double>(n));
    report.quotients.push_back(q);
    report.max_ratio = std::max(report.max_ratio, ratio);
    if (ratio > 1.0 + 1e-6) ++report.violations;
  }
  return report;
}

IteratedJuliaReport iterated_julia_check(const std::vector<IterateData>& iterates,
                                         double alpha) {
  IteratedJuliaReport report;
  for (const IterateData& it : iterates) {
    const double h = it.scaled_height();
    report.quotients.push_back(std::exp(static_cast<double>(it.n) * std::log(alpha) - std::log(h)));
    const double ratio = 1.0 / h;
    report.max_ratio = std::max(report.max_ratio, ratio);
    if (ratio > 1.0 + 1e-6) ++report.violations;
  }
  return report;
}

std::vector<double> defect_ratio_sequence(const Orbit& orbit) {
  std::vector<double> r;
  for (std::size_t n = 1; n < orbit.defects.size(); ++n) {
    r.push_back(orbit.defects[n] / orbit.defects[n - 1]);
  }
  return r;
}

std::vector<double> defect_ratio_sequence(const std::vector<IterateData>& iterates,
                                          double alpha) {
  std::vector<double> r;
  for (std::size_t n = 1; n < iterates.size(); ++n) {
    r.push_back(std::exp(iterates[n].log_ball_defect(alpha) -
                         iterates[n - 1].log_ball_defect(alpha)));
  }
  return r;
}

namespace {

void set_flags(RestrictednessReport& report) {
  const auto& s = report.special_seq;
  if (!s.empty()) {
    const std::size_t tail = std::min<std::size_t>(10, s.size());
    const auto first = s.end() - static_cast<std::ptrdiff_t>(tail);
    report.special_limit_zero =
        std::all_of(first, s.end(), [](double v) { return v < 1e-4; }) && s.back() <= *first;
  }
  const auto& r = report.restricted_seq;
  if (!r.empty()) {
    std::vector<double> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double late_max = *std::max_element(r.begin() + static_cast<std::ptrdiff_t>(r.size() / 2), r.end());
    report.restricted_bounded = late_max <= 10.0 * median;
  }
}

}  // namespace

RestrictednessReport restrictedness_report(const Orbit& orbit, const BoundaryPoint& zeta) {
  RestrictednessReport report;
  for (const BallPoint& z : orbit.points) {
    const cplx p = inner(z.coords(), zeta.coords());
    const ComplexVector perp = z.coords() - p * zeta.coords();
    const double a = std::abs(p);
    const double gamma_defect = (1.0 - a) * (1.0 + a);
    report.special_seq.push_back(perp.squared_norm() / gamma_defect);
    report.restricted_seq.push_back(std::abs(1.0 - p) / gamma_defect);
  }
  set_flags(report);
  return report;
}

RestrictednessReport restrictedness_report(const std::vector<IterateData>& iterates,
                                           double alpha) {
  RestrictednessReport report;
  for (const IterateData& it : iterates) {
    const double re_x = it.x.real();
    const double an = std::pow(alpha, static_cast<double>(it.n));
    report.special_seq.push_back(it.y.squared_norm() / re_x);
    report.restricted_seq.push_back(std::abs(it.x + an) / (2.0 * re_x));
  }
  set_flags(report);
  return report;
}

std::vector<double> origin_log_defects(const LinearFractionalMap& phi,
                                       const ClassificationResult& kind, std::size_t steps) {
  std::vector<double> out;
  out.reserve(steps + 1);
  if (kind.kind == MapKind::elliptic) {
    const Orbit o = orbit(phi, BallPoint::origin(phi.dim()), steps);
    if (o.truncated) {
      throw PrecisionExhaustedError("origin orbit came within double precision of the sphere",
                                    o.steps());
    }
    for (const BallPoint& z : o.points) {
      const double r = z.norm();
      out.push_back(std::log((1.0 - r) * (1.0 + r)));
    }
    return out;
  }
  const HalfSpaceForm form = ball_to_bcd(phi, kind.boundary_point());
  for (const IterateData& it : direct_iterates(form.map, steps)) {
    out.push_back(it.log_ball_defect(form.map.alpha()));
  }
  return out;
}

}  // namespace lfball
