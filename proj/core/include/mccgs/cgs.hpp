#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mccgs/constructible.hpp"
#include "mccgs/polyring.hpp"
#include "mccgs/primdec.hpp"

namespace mccgs {

/// Segment under discussion: N as its minimal primes, W irreducible.
struct WorkingSpec {
  std::vector<Ideal> primes;
  Ideal N;  // intersection of primes
  std::vector<Poly> W;

  static WorkingSpec make(std::vector<Ideal> primes, std::vector<Poly> W, const RingPtr& params);
  bool dead() const { return primes.empty(); }
  Poly h() const;
  RedSpec red() const { return RedSpec{N, W}; }
  /// One red-specification per prime, same W. Their union is this segment.
  std::vector<RedSpec> prime_cases() const;
  bool contains(std::span<const Rational> alpha) const;
};

enum class Nullity { Zero, NonNull, Undecided };

/// Nullity of a parameter polynomial on the segment.
Nullity nullity(const Poly& c, const WorkingSpec& s);

struct CoeffVerdict {
  Poly reduced;
  /// Leading coefficient whose nullity is undecided, if any.
  std::optional<Poly> branch_coefficient;
};

/// Reduces the x-coefficients of f modulo N, drops leading terms that
/// vanish on the segment and reports the first undecided leading coefficient.
CoeffVerdict reduce_coeffs(const Poly& f, const WorkingSpec& s, const ParametricRings& rings);

/// Non-null and null children of s for coefficient c; a dead child is nullopt.
/// Clears *certified when a decomposition below was not certified.
std::pair<std::optional<WorkingSpec>, std::optional<WorkingSpec>> branch(const WorkingSpec& s, const Poly& c,
                                                                          const PrimeOptions& opts = {},
                                                                          bool* certified = nullptr);

struct SegmentLeaf {
  std::vector<Poly> B;  // full ring, descending by lpp
  WorkingSpec spec;
  std::vector<Monomial> lpps;
  /// For each element of B, earlier (less specialized) forms with the same lpp.
  std::vector<std::vector<Poly>> ancestors;
};

struct BuildOptions {
  PrimeOptions primes;
};

struct BuildResult {
  std::vector<SegmentLeaf> leaves;
  bool certified = true;
};

BuildResult buildtree(std::span<const Poly> F, const ParametricRings& rings, std::span<const Poly> null0 = {},
                      std::span<const Poly> notnull0 = {}, const BuildOptions& opts = {});

/// Does g (reduced modulo N) stand for f on the segment: lc(g) non-null there
/// and g proportional to f at every point.
bool specializes_well(const Poly& g, const Poly& f, const WorkingSpec& s, const ParametricRings& rings);
/// Element-wise version over whole bases with matching lpps.
bool specializes_well(std::span<const Poly> G, const SegmentLeaf& leaf, const ParametricRings& rings);

/// Compares the specialized leaf basis with a direct Gröbner basis of the
/// specialized input at alpha. Throws when alpha is outside the segment.
bool check_against_oracle(const SegmentLeaf& leaf, std::span<const Poly> F, std::span<const Rational> alpha,
                          const ParametricRings& rings);

/// Specialization of a parametric basis at alpha: normalized, descending.
std::vector<Poly> specialize_basis(std::span<const Poly> B, std::span<const Rational> alpha,
                                   const ParametricRings& rings);

/// Leading power products of B in x, ascending (display order).
std::vector<Monomial> lpp_set(std::span<const Poly> B, const ParametricRings& rings);

}  // namespace mccgs
