#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lfball/ball_geometry.hpp"
#include "lfball/num_core.hpp"

namespace lfball {

/// Seeded random source. The engine is std::mt19937_64; the uniform and
/// normal transforms are written out, and streams are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  ///< [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();   ///< standard normal, Box-Muller
  cplx complex_normal() { return {normal(), normal()}; }
  ComplexVector complex_normal_vector(std::size_t n);
  ComplexMatrix complex_normal_matrix(std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Uniform sample from the ball of the given radius in C^m: a normalized
/// Gaussian direction scaled by radius * U^{1/(2m)}.
BallPoint sample_ball_point(Rng& rng, std::size_t m, double radius = 0.9);

std::vector<BallPoint> sample_ball(std::size_t m, std::size_t count,
                                   std::uint64_t seed = kDefaultSeed,
                                   double radius = 0.9);

}  // namespace lfball
