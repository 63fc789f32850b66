#pragma once

// Linear fractional maps phi(z) = (A z + B) / (<z, C> + D) of the unit ball,
// stored projectively as the (m+1)x(m+1) matrix T = [[A, B], [C*, D]].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lfball/ball_geometry.hpp"
#include "lfball/num_core.hpp"

namespace lfball {

/// J = diag(I_m, -1).
ComplexMatrix j_matrix(std::size_t m);

/// Factorization J - T_s* J T_s = X* X of the contractive representative
/// T_s = sqrt(t) T, with the scaled C and D of T_s. The de Branges-Rovnyak
/// kernel then equals
///   (1 / (<z,C> + D)) (1 + <L(z), L(w)> / (1 - <z,w>)) conj(1 / (<w,C> + D))
/// with L(z) = X (z; 1).
struct KernelFactorization {
  ComplexMatrix x;
  ComplexVector c;
  cplx d;
  double residual = 0.0;  ///< |X*X - (J - T_s* J T_s)|_F

  ComplexVector lift(const ComplexVector& z) const;       ///< L(z)
  cplx denominator(const ComplexVector& z) const;         ///< <z, C> + D
  cplx kernel(const ComplexVector& z, const ComplexVector& w) const;
};

class LinearFractionalMap {
 public:
  /// Throws DimensionError unless t is square with size >= 2, DomainError on
  /// non-finite entries.
  explicit LinearFractionalMap(ComplexMatrix t);

  static LinearFractionalMap from_blocks(const ComplexMatrix& a, const ComplexVector& b,
                                         const ComplexVector& c, cplx d);
  static LinearFractionalMap identity(std::size_t m);

  std::size_t dim() const noexcept { return t_.rows() - 1; }
  const ComplexMatrix& matrix() const noexcept { return t_; }

  ComplexMatrix a_block() const;
  ComplexVector b_block() const;
  ComplexVector c_block() const;  ///< C (the bottom row of T holds C*)
  cplx d_block() const;

  /// Scale t with J - t T*JT >= 0, once validated.
  std::optional<double> contractive_scale() const noexcept { return scale_; }
  bool is_validated() const noexcept { return factor_.has_value(); }
  /// Throws ValidationError on an unvalidated map.
  const KernelFactorization& factorization() const;

 private:
  friend LinearFractionalMap attach_validation(LinearFractionalMap, double, KernelFactorization);

  ComplexMatrix t_;
  std::optional<double> scale_;
  std::optional<KernelFactorization> factor_;
};

/// Raw image (A z + B) / (<z,C> + D); PoleError when the denominator vanishes
/// relative to |T|.
ComplexVector apply(const LinearFractionalMap& phi, const ComplexVector& z);

/// Image of an interior point; NotSelfMapError if it leaves the ball.
BallPoint eval(const LinearFractionalMap& phi, const BallPoint& z);

/// phi o psi (matrix T_phi T_psi). When both maps are validated the product
/// is validated with scale t_phi t_psi.
LinearFractionalMap compose(const LinearFractionalMap& phi, const LinearFractionalMap& psi);

/// True when the two matrices are proportional to relative tolerance tol.
bool projectively_equal(const LinearFractionalMap& phi, const LinearFractionalMap& psi,
                        double tol = 1e-10);

/// J - t T* J T
ComplexMatrix j_defect(const LinearFractionalMap& phi, double t);

/// A scale t in [1e-8, 1e8] maximizing the smallest eigenvalue of
/// J - t T*JT, or nothing when that eigenvalue stays below -1e-9.
std::optional<double> find_contractive_scaling(const LinearFractionalMap& phi);

/// Factorization of the scaled J-defect. Throws NotPsdError when t is not a
/// contractive scale.
KernelFactorization kernel_factorization(const LinearFractionalMap& phi, double t);

struct SelfMapReport {
  bool valid = false;
  std::optional<double> scale;
  double min_eig = 0.0;  ///< smallest eigenvalue of J - t T*JT at the chosen t
  std::size_t spot_checks = 0;
  std::size_t spot_failures = 0;
  std::string reason;
};

inline constexpr std::size_t kSelfMapSpotChecks = 500;

/// Scaling search plus an image spot check on quasi-random interior points.
SelfMapReport check_self_map(const LinearFractionalMap& phi);

/// Validated copy of phi (scale and kernel factorization attached).
/// Throws NotSelfMapError when phi is not a self-map of the ball.
LinearFractionalMap validated(const LinearFractionalMap& phi, SelfMapReport* report = nullptr);

/// de Branges-Rovnyak kernel (1 - <phi(z), phi(w)>) / (1 - <z, w>).
cplx dbr_kernel(const LinearFractionalMap& phi, const BallPoint& z, const BallPoint& w);

/// 1 - |phi(z)|^2 computed as (d + |L(z)|^2) / |<z,C> + D|^2 from the kernel
/// factorization, where d = 1 - |z|^2 is supplied by the caller. Free of the
/// cancellation in 1 - |phi(z)|^2 near the sphere. Requires a validated map.
double image_defect(const LinearFractionalMap& phi, const ComplexVector& z, double z_defect);

enum class FixedPointLocation { interior, boundary, exterior };

struct FixedPoint {
  ComplexVector point;
  FixedPointLocation location;
};

struct FixedPointSet {
  std::vector<FixedPoint> points;
  /// Set when eigenvalues cluster (repeated or nearly repeated spectrum). For
  /// a multi-dimensional eigenspace only its fixed point of least norm is
  /// listed.
  bool degenerate = false;
};

/// Fixed points from the eigenvectors (v; s) of T with s != 0.
FixedPointSet fixed_points(const LinearFractionalMap& phi);

/// Fixed point obtained by projecting (guess; 1) onto each eigenspace of T;
/// returns the candidate closest to guess.
std::optional<ComplexVector> nearest_fixed_point(const LinearFractionalMap& phi,
                                                 const ComplexVector& guess);

const char* to_string(FixedPointLocation location);

}  // namespace lfball
