#include "lfball/lfm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "lfball/errors.hpp"
#include "lfball/sampling.hpp"

namespace lfball {

namespace {

constexpr double kScaleLo = 1e-8;
constexpr double kScaleHi = 1e8;
constexpr std::size_t kScaleGrid = 200;
constexpr double kScaleFeasibility = 1e-9;
constexpr std::uint64_t kSpotCheckSeed = 0x5107c4ec;

ComplexVector homogeneous(const ComplexVector& z) {
  ComplexVector v(z.size() + 1);
  for (std::size_t k = 0; k < z.size(); ++k) v[k] = z[k];
  v[z.size()] = 1.0;
  return v;
}

void require_dim(const LinearFractionalMap& phi, const ComplexVector& z, const char* what) {
  if (z.size() != phi.dim()) {
    throw DimensionError(std::string(what) + ": point has dimension " +
                         std::to_string(z.size()) + ", map has dimension " +
                         std::to_string(phi.dim()));
  }
}

}  // namespace

ComplexMatrix j_matrix(std::size_t m) {
  ComplexMatrix j = ComplexMatrix::identity(m + 1);
  j(m, m) = -1.0;
  return j;
}

// ------------------------------------------------------------ factorization

ComplexVector KernelFactorization::lift(const ComplexVector& z) const {
  return x * homogeneous(z);
}

cplx KernelFactorization::denominator(const ComplexVector& z) const {
  return inner(z, c) + d;
}

cplx KernelFactorization::kernel(const ComplexVector& z, const ComplexVector& w) const {
  const cplx dz = denominator(z), dw = denominator(w);
  const cplx middle = 1.0 + inner(lift(z), lift(w)) / (1.0 - inner(z, w));
  return middle / (dz * std::conj(dw));
}

// ---------------------------------------------------------------- the map

LinearFractionalMap::LinearFractionalMap(ComplexMatrix t) : t_(std::move(t)) {
  if (!t_.is_square() || t_.rows() < 2) {
    throw DimensionError("LinearFractionalMap: matrix must be square of size >= 2");
  }
  if (!t_.all_finite()) throw DomainError("LinearFractionalMap: non-finite matrix entries");
}

LinearFractionalMap LinearFractionalMap::from_blocks(const ComplexMatrix& a,
                                                     const ComplexVector& b,
                                                     const ComplexVector& c, cplx d) {
  const std::size_t m = a.rows();
  if (!a.is_square() || b.size() != m || c.size() != m) {
    throw DimensionError("LinearFractionalMap::from_blocks: inconsistent block sizes");
  }
  ComplexMatrix t(m + 1, m + 1);
  t.set_block(0, 0, a);
  for (std::size_t i = 0; i < m; ++i) {
    t(i, m) = b[i];
    t(m, i) = std::conj(c[i]);
  }
  t(m, m) = d;
  return LinearFractionalMap(std::move(t));
}

LinearFractionalMap LinearFractionalMap::identity(std::size_t m) {
  return LinearFractionalMap(ComplexMatrix::identity(m + 1));
}

ComplexMatrix LinearFractionalMap::a_block() const { return t_.block(0, 0, dim(), dim()); }

ComplexVector LinearFractionalMap::b_block() const {
  ComplexVector b(dim());
  for (std::size_t i = 0; i < dim(); ++i) b[i] = t_(i, dim());
  return b;
}

ComplexVector LinearFractionalMap::c_block() const {
  ComplexVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = std::conj(t_(dim(), i));
  return c;
}

cplx LinearFractionalMap::d_block() const { return t_(dim(), dim()); }

const KernelFactorization& LinearFractionalMap::factorization() const {
  if (!factor_) throw ValidationError("map has not been validated as a self-map of the ball");
  return *factor_;
}

LinearFractionalMap attach_validation(LinearFractionalMap phi, double scale,
                                      KernelFactorization factor) {
  phi.scale_ = scale;
  phi.factor_ = std::move(factor);
  return phi;
}

// ------------------------------------------------------------- evaluation

ComplexVector apply(const LinearFractionalMap& phi, const ComplexVector& z) {
  require_dim(phi, z, "apply");
  const ComplexVector image = phi.matrix() * homogeneous(z);
  const std::size_t m = phi.dim();
  const cplx den = image[m];
  if (std::abs(den) < 1e-14 * phi.matrix().frobenius_norm()) {
    throw PoleError("linear fractional map: denominator <z,C> + D vanishes");
  }
  ComplexVector out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = image[k] / den;
  return out;
}

BallPoint eval(const LinearFractionalMap& phi, const BallPoint& z) {
  ComplexVector image = apply(phi, z.coords());
  if (!(image.norm() < 1.0)) {
    throw NotSelfMapError("linear fractional map sends an interior point to |phi(z)| >= 1");
  }
  return BallPoint(std::move(image));
}

LinearFractionalMap compose(const LinearFractionalMap& phi, const LinearFractionalMap& psi) {
  if (phi.dim() != psi.dim()) throw DimensionError("compose: dimension mismatch");
  LinearFractionalMap product(phi.matrix() * psi.matrix());
  if (phi.is_validated() && psi.is_validated()) {
    // products of J-contractions are J-contractions
    const double t = *phi.contractive_scale() * *psi.contractive_scale();
    return attach_validation(product, t, kernel_factorization(product, t));
  }
  return product;
}

bool projectively_equal(const LinearFractionalMap& phi, const LinearFractionalMap& psi,
                        double tol) {
  if (phi.dim() != psi.dim()) return false;
  const auto& a = phi.matrix();
  const auto& b = psi.matrix();
  // pick the largest entry of a to fix the proportionality constant
  std::size_t best = 0;
  for (std::size_t k = 1; k < a.entries().size(); ++k)
    if (std::abs(a.entries()[k]) > std::abs(a.entries()[best])) best = k;
  const cplx ab = a.entries()[best], bb = b.entries()[best];
  if (std::abs(bb) == 0.0) return false;
  const cplx lambda = ab / bb;
  const ComplexMatrix diff = a - lambda * b;
  return diff.frobenius_norm() <= tol * a.frobenius_norm();
}

// ---------------------------------------------------- J-contractivity

ComplexMatrix j_defect(const LinearFractionalMap& phi, double t) {
  if (!(t > 0.0)) throw DomainError("j_defect: scale must be positive");
  const ComplexMatrix j = j_matrix(phi.dim());
  const ComplexMatrix& tm = phi.matrix();
  return (j - t * (tm.adjoint() * j * tm)).hermitian_part();
}

std::optional<double> find_contractive_scaling(const LinearFractionalMap& phi) {
  const ComplexMatrix j = j_matrix(phi.dim());
  const ComplexMatrix& tm = phi.matrix();
  const ComplexMatrix form = (tm.adjoint() * j * tm).hermitian_part();
  // concave in t, hence unimodal in s = log t
  auto min_eig = [&](double s) { return hermitian_min_eig(j - std::exp(s) * form); };

  const double lo = std::log(kScaleLo), hi = std::log(kScaleHi);
  const double step = (hi - lo) / static_cast<double>(kScaleGrid - 1);
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kScaleGrid; ++k) {
    const double v = min_eig(lo + step * static_cast<double>(k));
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }

  double a = lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  double b = lo + step * static_cast<double>(std::min(best + 1, kScaleGrid - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = min_eig(x1), f2 = min_eig(x2);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = min_eig(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = min_eig(x1);
    }
  }
  const std::array<std::pair<double, double>, 3> candidates{
      {{lo + step * static_cast<double>(best), best_value}, {x1, f1}, {x2, f2}}};
  const auto top = std::max_element(candidates.begin(), candidates.end(),
                                     [](const auto& p, const auto& q) { return p.second < q.second; });
  if (top->second < -kScaleFeasibility) return std::nullopt;
  return std::exp(top->first);
}

KernelFactorization kernel_factorization(const LinearFractionalMap& phi, double t) {
  const ComplexMatrix defect = j_defect(phi, t);
  const double tol = kDefaultTol * std::max(1.0, defect.frobenius_norm());
  KernelFactorization f{psd_factor(defect, tol), ComplexVector(), 0.0, 0.0};
  const double root = std::sqrt(t);
  f.c = root * phi.c_block();
  f.d = root * phi.d_block();
  f.residual = (f.x.adjoint() * f.x - defect).frobenius_norm();
  return f;
}

SelfMapReport check_self_map(const LinearFractionalMap& phi) {
  SelfMapReport report;
  report.scale = find_contractive_scaling(phi);
  if (!report.scale) {
    report.min_eig = hermitian_min_eig(j_defect(phi, 1.0));
    report.reason = "J - t T*JT is not positive semidefinite for any t in [1e-8, 1e8]";
    return report;
  }
  report.min_eig = hermitian_min_eig(j_defect(phi, *report.scale));

  Rng rng(kSpotCheckSeed);
  const std::size_t m = phi.dim();
  for (std::size_t i = 0; i < kSelfMapSpotChecks; ++i) {
    const ComplexVector z =
        i == 0 ? ComplexVector(m) : sample_ball_point(rng, m, 0.999).coords();
    ++report.spot_checks;
    try {
      if (!(apply(phi, z).norm() < 1.0)) ++report.spot_failures;
    } catch (const PoleError&) {
      ++report.spot_failures;
    }
  }
  if (report.spot_failures > 0) {
    report.reason = "image of an interior sample point left the ball";
    return report;
  }
  report.valid = true;
  return report;
}

LinearFractionalMap validated(const LinearFractionalMap& phi, SelfMapReport* report) {
  SelfMapReport local = check_self_map(phi);
  if (report) *report = local;
  if (!local.valid) throw NotSelfMapError("not a self-map of the ball: " + local.reason);
  return attach_validation(phi, *local.scale, kernel_factorization(phi, *local.scale));
}

cplx dbr_kernel(const LinearFractionalMap& phi, const BallPoint& z, const BallPoint& w) {
  const ComplexVector pz = apply(phi, z.coords());
  const ComplexVector pw = apply(phi, w.coords());
  return (1.0 - inner(pz, pw)) / (1.0 - inner(z.coords(), w.coords()));
}

double image_defect(const LinearFractionalMap& phi, const ComplexVector& z, double z_defect) {
  require_dim(phi, z, "image_defect");
  const KernelFactorization& f = phi.factorization();
  return (z_defect + f.lift(z).squared_norm()) / std::norm(f.denominator(z));
}

// ------------------------------------------------------------ fixed points

namespace {

struct Eigenspace {
  cplx value;
  ComplexMatrix basis;  // orthonormal columns
  std::size_t multiplicity;
};

std::vector<Eigenspace> eigenspaces(const ComplexMatrix& t, bool& degenerate) {
  const std::vector<cplx> values = eigenvalues(t);
  const double scale = std::max(t.frobenius_norm(), std::numeric_limits<double>::min());
  const double cluster_tol = 1e-6 * scale;

  std::vector<std::vector<cplx>> clusters;
  for (const cplx& v : values) {
    bool placed = false;
    for (auto& c : clusters) {
      if (std::abs(c.front() - v) <= cluster_tol) {
        c.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({v});
  }

  degenerate = false;
  std::vector<Eigenspace> out;
  const std::size_t n = t.rows();
  for (const auto& c : clusters) {
    cplx mean = 0.0;
    for (const cplx& v : c) mean += v;
    mean /= static_cast<double>(c.size());
    if (c.size() > 1) degenerate = true;
    ComplexMatrix shifted = t;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mean;
    ComplexMatrix basis = null_space(shifted, cluster_tol);
    if (basis.cols() == 0) {
      degenerate = true;
      continue;
    }
    out.push_back({mean, std::move(basis), c.size()});
  }
  return out;
}

// Projection of y onto span(basis), dehomogenized; nothing for points at
// infinity.
std::optional<ComplexVector> dehomogenized_projection(const ComplexMatrix& basis,
                                                      const ComplexVector& y) {
  const ComplexVector coeff = basis.adjoint() * y;
  const ComplexVector p = basis * coeff;
  const std::size_t m = p.size() - 1;
  if (!(std::abs(p[m]) > 1e-10 * p.norm())) return std::nullopt;
  ComplexVector point(m);
  for (std::size_t k = 0; k < m; ++k) point[k] = p[k] / p[m];
  return point;
}

FixedPointLocation locate(const ComplexVector& p) {
  const double r = p.norm();
  if (r < 1.0 - 1e-9) return FixedPointLocation::interior;
  if (r <= 1.0 + 1e-9) return FixedPointLocation::boundary;
  return FixedPointLocation::exterior;
}

}  // namespace

FixedPointSet fixed_points(const LinearFractionalMap& phi) {
  FixedPointSet out;
  const std::size_t m = phi.dim();
  const ComplexVector origin = ComplexVector::unit(m + 1, m);
  for (const Eigenspace& space : eigenspaces(phi.matrix(), out.degenerate)) {
    // the least-norm fixed point of the eigenspace is the projection of (0; 1)
    auto p = dehomogenized_projection(space.basis, origin);
    if (!p) continue;
    const bool duplicate = std::any_of(out.points.begin(), out.points.end(),
                                       [&](const FixedPoint& q) { return (q.point - *p).norm() < 1e-8; });
    if (!duplicate) out.points.push_back({*p, locate(*p)});
  }
  return out;
}

std::optional<ComplexVector> nearest_fixed_point(const LinearFractionalMap& phi,
                                                 const ComplexVector& guess) {
  require_dim(phi, guess, "nearest_fixed_point");
  bool degenerate = false;
  std::optional<ComplexVector> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const Eigenspace& space : eigenspaces(phi.matrix(), degenerate)) {
    auto p = dehomogenized_projection(space.basis, homogeneous(guess));
    if (!p) continue;
    const double dist = (*p - guess).norm();
    if (dist < best_dist) {
      best_dist = dist;
      best = std::move(p);
    }
  }
  return best;
}

const char* to_string(FixedPointLocation location) {
  switch (location) {
    case FixedPointLocation::interior: return "interior";
    case FixedPointLocation::boundary: return "boundary";
    case FixedPointLocation::exterior: return "exterior";
  }
  return "unknown";
}

}  // namespace lfball
