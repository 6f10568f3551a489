#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mccgs/groebner.hpp"

namespace mccgs {

/// Seeded generator of rational parameter points of bounded height.
class PointSampler {
 public:
  explicit PointSampler(unsigned seed, int height = 9) : rng_(seed), height_(height) {}

  Rational random_rational();
  std::vector<Rational> random_point(std::size_t m);
  /// A rational point of V(P) for a prime P, found by back-substitution in a
  /// lex basis; nullopt when the chosen fibre has no rational point.
  std::optional<std::vector<Rational>> point_on(const Ideal& P, int attempts = 8);

 private:
  std::mt19937 rng_;
  int height_;
};

/// Rational roots of a univariate polynomial (any ring, one variable used).
std::vector<Rational> rational_roots(const Poly& f, std::size_t var);

}  // namespace mccgs
