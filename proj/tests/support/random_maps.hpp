#pragma once

// Random and named maps shared by the unit tests, the acceptance suite and
// the benchmarks.

#include <cstddef>

#include "lfball/bcd.hpp"
#include "lfball/lfm.hpp"
#include "lfball/num_core.hpp"
#include "lfball/sampling.hpp"

namespace lfball::testing {

/// exp(G) by scaling and squaring of a degree-18 Taylor polynomial.
ComplexMatrix matrix_exp(const ComplexMatrix& g);

/// exp of a random skew-Hermitian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

/// exp of a random element of u(m,1); preserves the form diag(I, -1), so it
/// represents an automorphism of the ball.
ComplexMatrix random_j_unitary(Rng& rng, std::size_t m, double spread = 0.8);

/// Validated map U1 K U2 with U1, U2 automorphisms and K a contraction
/// z -> A0 z (+ B0), |A0| <= 0.6, |B0| <= 0.3.
LinearFractionalMap random_lfm(Rng& rng, std::size_t m);

/// Valid half-space data with |A| < sqrt(alpha) and Re c chosen above the
/// self-map threshold. alpha = 1 when parabolic.
BCDMap random_bcd(Rng& rng, std::size_t m, bool parabolic = false);

/// The ball map of random_bcd rotated so that its Denjoy-Wolff point is a
/// random point of the sphere.
LinearFractionalMap random_nonelliptic(Rng& rng, std::size_t m, bool parabolic = false);

/// (z1, z') -> ((z1 + r) / (r z1 + 1), sqrt(1 - r^2) z' / (r z1 + 1)).
LinearFractionalMap disk_automorphism(double r, std::size_t m);
/// z -> i z
LinearFractionalMap rotation_map(std::size_t m);
/// z -> (1 + z) / (3 - z) in one variable.
LinearFractionalMap parabolic_map();

}  // namespace lfball::testing
