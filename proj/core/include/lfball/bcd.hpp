#pragma once

// Half-space normal form of non-elliptic linear fractional maps. Conjugated
// by the Cayley transform so that the Denjoy-Wolff point sits at infinity,
// such a map becomes the affine self-map of the Siegel half-space
//
//   (w1, w') -> ((w1 + c + <w', b>) / alpha, (A w' + d) / alpha).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfball/ball_geometry.hpp"
#include "lfball/lfm.hpp"
#include "lfball/num_core.hpp"

namespace lfball {

class BCDMap {
 public:
  /// Throws DomainError unless 0 < alpha <= 1 and all data are finite;
  /// DimensionError when b, d, A disagree on m - 1.
  BCDMap(double alpha, cplx c, ComplexVector b, ComplexVector d, ComplexMatrix a);

  std::size_t dim() const noexcept { return b_.size() + 1; }
  double alpha() const noexcept { return alpha_; }
  cplx c() const noexcept { return c_; }
  const ComplexVector& b() const noexcept { return b_; }
  const ComplexVector& d() const noexcept { return d_; }
  const ComplexMatrix& a() const noexcept { return a_; }

  bool is_parabolic() const noexcept { return alpha_ == 1.0; }

  /// Projective (m+1)x(m+1) matrix [[1, b*, c], [0, A, d], [0, 0, alpha]]
  /// acting on (w1, w', 1).
  ComplexMatrix affine_matrix() const;

 private:
  double alpha_;
  cplx c_;
  ComplexVector b_;
  ComplexVector d_;
  ComplexMatrix a_;
};

/// Image of a point of the (closed) half-space. Throws ValidationError when
/// an open-half-space input lands outside the open half-space.
SiegelPoint eval_bcd(const BCDMap& map, const SiegelPoint& w);

struct BCDValidationReport {
  bool valid = false;
  double a_norm = 0.0;  ///< largest singular value of A
  bool norm_ok = false;
  /// Supremum over w' of |Aw'+d|^2 - alpha |w'|^2 - alpha Re<w',b> - alpha Re c;
  /// +infinity when unbounded.
  double quadratic_max = 0.0;
  bool quadratic_ok = false;
  std::size_t spot_checks = 0;
  double spot_max = 0.0;  ///< largest g(w') seen at the random samples
  std::string reason;
};

inline constexpr std::size_t kBcdSpotChecks = 1000;

BCDValidationReport validate_bcd(const BCDMap& map);

/// beta_n = sum_{k=0}^n alpha^k
double beta_seq(double alpha, std::size_t n);

/// Coefficients (constant term first) of p_n(z) = sum_k beta_{n-k} z^k and
/// q_n(z) = sum_k alpha^{n-k} z^k.
std::pair<std::vector<double>, std::vector<double>> pq_coeffs(double alpha, std::size_t n);

/// The n-th iterate of (1, 0) in the half-space. x = alpha^n u and
/// y = alpha^{n/2} v stay bounded; u and v are dropped once alpha^{-n}
/// exceeds 1e300.
struct IterateData {
  std::size_t n = 0;
  std::optional<cplx> u;
  std::optional<ComplexVector> v;
  cplx x;
  ComplexVector y;

  /// Re x - |y|^2 = alpha^n (Re u - |v|^2), bounded below by 1.
  double scaled_height() const { return x.real() - y.squared_norm(); }
  /// log(1 - |z|^2) for the ball point z = psi^{-1}(u, v).
  double log_ball_defect(double alpha) const;
};

/// Iterate through the closed-form polynomials in A. Requires n >= 1.
IterateData closed_form_iterate(const BCDMap& map, std::size_t n);

/// Iterates n = 0..count obtained by stepping the map in the scaled
/// coordinates x, y.
std::vector<IterateData> direct_iterates(const BCDMap& map, std::size_t count);

/// x = 1 + (c + <(I - A)^{-1} d, b>) / (1 - alpha). DomainError for
/// parabolic maps.
cplx x_limit(const BCDMap& map);

/// t_n = alpha^{-n} |q_{n-1}(A) d|^2 for n = 1..count.
std::vector<double> restricted_defect_seq(const BCDMap& map, std::size_t count);

/// A = sqrt(alpha) I, d = e1, b = 2 alpha^{-1/2} d, c = 1 / alpha.
BCDMap counterexample_map(double alpha, std::size_t m);

/// Ball map psi^{-1} o map o psi, validated. ValidationError when the
/// half-space data fail validate_bcd.
LinearFractionalMap bcd_to_ball(const BCDMap& map);

struct HalfSpaceForm {
  BCDMap map;
  ComplexMatrix rotation;  ///< unitary R with R zeta = e1
  double residual = 0.0;   ///< size of the discarded non-affine entries, relative to |F|
};

/// Normal form of phi after rotating zeta to e1 and conjugating by psi.
/// zeta must be a boundary fixed point of phi with dilatation <= 1.
HalfSpaceForm ball_to_bcd(const LinearFractionalMap& phi, const BoundaryPoint& zeta);

}  // namespace lfball
