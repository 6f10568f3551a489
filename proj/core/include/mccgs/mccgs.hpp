#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mccgs/cgs.hpp"
#include "mccgs/constructible.hpp"

namespace mccgs {

/// Leaves sharing one basis.
struct SegmentGroup {
  std::vector<Poly> B;  // descending by lpp
  std::vector<Monomial> lpps;  // ascending
  std::vector<WorkingSpec> specs;
  /// Leaf basis of each merged spec, aligned with specs.
  std::vector<std::vector<Poly>> member_bases;
  /// Same-lpp basis variants from the merged leaves, per element of B.
  std::vector<std::vector<Poly>> candidates;
};

/// Restricted DECIDE: f if it specializes well on s2 (against f2), else f2
/// if it specializes well on s1 (against f), else nullopt.
std::optional<Poly> decide(const Poly& f, const WorkingSpec& s1, const Poly& f2, const WorkingSpec& s2,
                           const ParametricRings& rings);

struct SelectResult {
  std::vector<SegmentGroup> groups;
  /// Pairs of groups with equal lpp sets that could not be merged.
  std::vector<std::pair<std::size_t, std::size_t>> unmerged;
};

/// Greedy grouping of leaves with equal lpp sets and a common basis.
SelectResult selectcases(const std::vector<SegmentLeaf>& leaves, const ParametricRings& rings);

struct Segment {
  std::vector<Monomial> lpps;  // ascending
  std::vector<Poly> B;         // descending by lpp
  PTree tree;
  std::vector<RedSpec> specs;  // the red-specifications merged here
};

struct Diagnostics {
  /// False when a factorization or prime decomposition gave up somewhere.
  bool certified = true;
  /// Whether the raw ADDCASE loop matched every canonical tree.
  bool addcase_agreed = true;
  std::size_t leaves = 0;
  std::vector<std::string> unmerged;
};

struct MccgsTree {
  ParametricRings rings;
  std::vector<Segment> segments;
  Diagnostics diagnostics;
};

struct MccgsOptions {
  PrimeOptions primes;
};

MccgsTree gencantree(const SelectResult& sel, const ParametricRings& rings, const MccgsOptions& opts = {});

MccgsTree compute_mccgs(std::span<const Poly> F, const ParametricRings& rings, std::span<const Poly> null0 = {},
                std::span<const Poly> notnull0 = {}, const MccgsOptions& opts = {});

/// Index of the segment containing alpha, if any.
std::optional<std::size_t> locate(const MccgsTree& T, std::span<const Rational> alpha);

/// Compares the specialized segment basis with a direct basis at alpha.
bool check_segment(const Segment& s, std::span<const Poly> F, std::span<const Rational> alpha,
                   const ParametricRings& rings);

/// "[y, x]" style rendering of an lpp set.
std::string lpps_to_string(const std::vector<Monomial>& lpps, const ParametricRings& rings);

}  // namespace mccgs
