#pragma once

#include <random>
#include <vector>

#include "mccgs/polyring.hpp"

namespace testing_support {

using namespace mccgs;

inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, int terms, int maxdeg, int coef_bound = 3) {
  std::uniform_int_distribution<int> coef(-coef_bound, coef_bound), deg(0, maxdeg);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int budget = deg(rng);
    for (std::size_t v = 0; v < ring->nvars() && budget > 0; ++v) {
      int e = std::uniform_int_distribution<int>(0, budget)(rng);
      m.set(v, e);
      budget -= e;
    }
    ts.push_back({m, Rational(coef(rng))});
  }
  return Poly(ring, std::move(ts));
}

}  // namespace testing_support
