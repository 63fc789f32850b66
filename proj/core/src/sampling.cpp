#include "lfball/sampling.hpp"

#include <cmath>
#include <numbers>

#include "lfball/errors.hpp"

namespace lfball {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

ComplexVector Rng::complex_normal_vector(std::size_t n) {
  ComplexVector v(n);
  for (auto& x : v) x = complex_normal();
  return v;
}

ComplexMatrix Rng::complex_normal_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = complex_normal();
  return a;
}

BallPoint sample_ball_point(Rng& rng, std::size_t m, double radius) {
  if (m == 0) throw DimensionError("sample_ball_point: dimension must be positive");
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("sample_ball_point: radius must lie in (0, 1)");
  ComplexVector g = rng.complex_normal_vector(m);
  double n = g.norm();
  while (n == 0.0) {
    g = rng.complex_normal_vector(m);
    n = g.norm();
  }
  const double r = radius * std::pow(rng.uniform(), 1.0 / (2.0 * static_cast<double>(m)));
  return BallPoint((r / n) * g);
}

std::vector<BallPoint> sample_ball(std::size_t m, std::size_t count, std::uint64_t seed,
                                   double radius) {
  Rng rng(seed);
  std::vector<BallPoint> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) points.push_back(sample_ball_point(rng, m, radius));
  return points;
}

}  // namespace lfball
