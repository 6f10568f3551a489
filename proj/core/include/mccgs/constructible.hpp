#pragma once

#include <span>
#include <string>
#include <vector>

#include "mccgs/groebner.hpp"
#include "mccgs/primdec.hpp"

namespace mccgs {

/// Segment V(N) \ V(prod W): N radical, W irreducible.
struct RedSpec {
  Ideal N;
  std::vector<Poly> W;

  Poly h() const;
  /// Membership of a parameter point.
  bool contains(std::span<const Rational> alpha) const;
  std::string to_string() const;
};

/// V(N) \ V(M) with N contained in M.
struct DiffSpec {
  Ideal N;
  Ideal M;
};

DiffSpec red_to_diff(const RedSpec& s);

/// Non-root vertex of a P-tree. A padding vertex stands for the unit ideal.
struct PNode {
  Ideal ideal;
  bool pad = false;
  std::vector<PNode> children;
};

/// Rooted P-tree; the root carries no ideal and owns `children`.
struct PTree {
  RingPtr ring;
  std::vector<PNode> children;
  /// False when some prime decomposition below was not certified.
  bool certified = true;

  bool empty() const { return children.empty(); }
};

PNode pad_node(const RingPtr& ring);

/// Two-level can-specification tree of V(I) \ V(J).
PTree difftocantree(const Ideal& I, const Ideal& J, const PrimeOptions& opts = {});

/// One ADDCASE step at the vertex reached from the root by `path` (child
/// indices, even length; empty = root). Returns false when the case was
/// fully absorbed below the vertex.
bool addcase(const RedSpec& s, PTree& T, const std::vector<std::size_t>& path = {},
             const PrimeOptions& opts = {});

/// Removes cancellations and inclusions among the children of an odd vertex.
void simplifysons(PNode& v);

/// The raw ADDCASE loop over l, in list order.
PTree gcs_addcase(const std::vector<RedSpec>& l, const RingPtr& ring, const PrimeOptions& opts = {});

/// Generalized canonical specification of the union of the segments in l.
/// Independent of the order of l. When addcase_agreed is given it reports
/// whether the raw ADDCASE loop already produced the same tree.
PTree gcs(const std::vector<RedSpec>& l, const RingPtr& ring, const PrimeOptions& opts = {},
          bool* addcase_agreed = nullptr);

bool member(std::span<const Rational> alpha, const PTree& T);
bool member(std::span<const Rational> alpha, const PNode& v);

/// Zariski closure: intersection of the depth-one ideals.
Ideal closure(const PTree& T);

/// Recursively sorts children (deterministic canonical order).
void sort_tree(PTree& T);
bool tree_equal(const PTree& a, const PTree& b);

/// Human-readable violations of the P-tree invariants (strict inclusion
/// along arcs, irredundant siblings, even path lengths). Empty when valid.
std::vector<std::string> check_structure(const PTree& T);

/// Compact single-line rendering, e.g. "{<a> -> {<a, b> -> {[1]}}}".
std::string tree_to_string(const PTree& T);

}  // namespace mccgs
