#pragma once

#include <utility>
#include <vector>

#include "mccgs/groebner.hpp"
#include "mccgs/polyring.hpp"

namespace mccgs {

struct FactorOptions {
  /// Squarefree parts of larger total degree (in two or more variables) are
  /// not split and come back flagged as unverified.
  int max_total_degree = 8;
  /// Upper bound on recombination subsets tried per polynomial.
  std::size_t max_subsets = 1u << 14;
};

struct Factorization {
  Rational unit = 1;
  std::vector<std::pair<Poly, int>> factors;
  /// False when some factor could not be proven irreducible.
  bool certified = true;

  Poly expand(const RingPtr& ring) const;
};

/// p = unit * prod q_i^i with q_i squarefree and pairwise coprime.
Factorization squarefree(const Poly& p);
/// Irreducible factorization over Q; factors normalized, sorted by the ring order.
Factorization factor(const Poly& p, const FactorOptions& opts = {});

/// Factorization of a primitive squarefree integer polynomial in one
/// variable, coefficients indexed by degree. Exposed for testing.
std::vector<std::vector<Integer>> factor_univariate_z(const std::vector<Integer>& f, std::size_t max_subsets,
                                                      bool* certified);

struct PrimeOptions {
  FactorOptions factor;
  /// Random linear forms tried when certifying a candidate component.
  int certification_attempts = 3;
  unsigned seed = 1;
};

struct PrimeList {
  std::vector<Ideal> components;
  /// False when factorization or primality certification gave up somewhere.
  bool certified = true;
};

/// Minimal primes of sqrt(I). <1> yields no components.
PrimeList minimal_primes(const Ideal& I, const PrimeOptions& opts = {});

/// Drops members containing another member and sorts deterministically.
std::vector<Ideal> irredundant(std::vector<Ideal> L);

/// Deterministic ordering used for prime lists and tree children.
bool ideal_less(const Ideal& a, const Ideal& b);

}  // namespace mccgs
