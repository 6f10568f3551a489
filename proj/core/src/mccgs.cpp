#include "mccgs/mccgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace mccgs {

namespace {

void add_unique(std::vector<Poly>& v, const Poly& p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

bool well_on_all(const Poly& p, const SegmentGroup& g, std::size_t k, const SegmentLeaf& extra,
                 const ParametricRings& R) {
  for (std::size_t m = 0; m < g.specs.size(); ++m)
    if (!specializes_well(p, g.member_bases[m][k], g.specs[m], R)) return false;
  return specializes_well(p, extra.B[k], extra.spec, R);
}

// Merges leaf into g when every basis position has a common representative.
bool try_merge(SegmentGroup& g, const SegmentLeaf& leaf, const ParametricRings& R) {
  std::vector<Poly> nb;
  for (std::size_t k = 0; k < g.B.size(); ++k) {
    std::vector<Poly> cands{g.B[k], leaf.B[k]};
    for (const auto& c : g.candidates[k]) add_unique(cands, c);
    for (const auto& c : leaf.ancestors[k]) add_unique(cands, c);
    auto it = std::find_if(cands.begin(), cands.end(), [&](const Poly& p) { return well_on_all(p, g, k, leaf, R); });
    if (it == cands.end()) return false;
    nb.push_back(*it);
  }
  g.B = std::move(nb);
  g.specs.push_back(leaf.spec);
  g.member_bases.push_back(leaf.B);
  for (std::size_t k = 0; k < g.B.size(); ++k) {
    add_unique(g.candidates[k], leaf.B[k]);
    for (const auto& c : leaf.ancestors[k]) add_unique(g.candidates[k], c);
  }
  return true;
}

bool is_generic(const std::vector<RedSpec>& specs) {
  return std::any_of(specs.begin(), specs.end(), [](const RedSpec& s) { return s.N.is_zero(); });
}

// Descending comparison of lpp sets; a proper prefix comes after.
int compare_lpps(const std::vector<Monomial>& a, const std::vector<Monomial>& b, const TermOrder& ord) {
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    int c = ord.compare(a[--i], b[--j]);
    if (c != 0) return c;
  }
  if (i == 0 && j == 0) return 0;
  return i > 0 ? 1 : -1;
}

}  // namespace

std::optional<Poly> decide(const Poly& f, const WorkingSpec& s1, const Poly& f2, const WorkingSpec& s2,
                           const ParametricRings& rings) {
  if (leading(f, rings).lpp != leading(f2, rings).lpp) throw std::invalid_argument("decide: lpp mismatch");
  if (specializes_well(f, f2, s2, rings)) return f;
  if (specializes_well(f2, f, s1, rings)) return f2;
  return std::nullopt;
}

SelectResult selectcases(const std::vector<SegmentLeaf>& leaves, const ParametricRings& rings) {
  SelectResult out;
  std::vector<bool> used(leaves.size(), false);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const SegmentLeaf& L = leaves[i];
    SegmentGroup g{L.B, lpp_set(L.B, rings), {L.spec}, {L.B}, L.ancestors};
    for (std::size_t k = 0; k < g.B.size(); ++k) add_unique(g.candidates[k], L.B[k]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (used[j] || leaves[j].lpps != L.lpps) continue;
      if (try_merge(g, leaves[j], rings)) used[j] = true;
    }
    out.groups.push_back(std::move(g));
  }
  for (std::size_t a = 0; a < out.groups.size(); ++a)
    for (std::size_t b = a + 1; b < out.groups.size(); ++b)
      if (out.groups[a].lpps == out.groups[b].lpps) out.unmerged.push_back({a, b});
  return out;
}

MccgsTree gencantree(const SelectResult& sel, const ParametricRings& rings, const MccgsOptions& opts) {
  MccgsTree T{rings, {}, {}};
  for (const auto& g : sel.groups) {
    Segment s;
    s.lpps = g.lpps;
    s.B = g.B;
    for (const auto& w : g.specs)
      for (auto& r : w.prime_cases()) s.specs.push_back(std::move(r));
    bool agreed = true;
    s.tree = gcs(s.specs, rings.params, opts.primes, &agreed);
    T.diagnostics.addcase_agreed = T.diagnostics.addcase_agreed && agreed;
    T.diagnostics.certified = T.diagnostics.certified && s.tree.certified;
    T.segments.push_back(std::move(s));
  }
  const TermOrder& ord = rings.full->order();
  std::vector<std::size_t> idx(T.segments.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto less = [&](std::size_t a, std::size_t b) {
    const Segment& x = T.segments[a];
    const Segment& y = T.segments[b];
    bool gx = is_generic(x.specs), gy = is_generic(y.specs);
    if (gx != gy) return gx;
    int c = compare_lpps(x.lpps, y.lpps, ord);
    if (c != 0) return c > 0;
    return tree_to_string(x.tree) < tree_to_string(y.tree);
  };
  std::stable_sort(idx.begin(), idx.end(), less);
  std::vector<Segment> sorted;
  std::vector<std::size_t> pos(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    pos[idx[i]] = i;
    sorted.push_back(std::move(T.segments[idx[i]]));
  }
  T.segments = std::move(sorted);
  for (auto [a, b] : sel.unmerged) {
    std::size_t x = std::min(pos[a], pos[b]), y = std::max(pos[a], pos[b]);
    T.diagnostics.unmerged.push_back("segments " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                                     " share lpp set " + lpps_to_string(T.segments[x].lpps, rings));
  }
  return T;
}

MccgsTree compute_mccgs(std::span<const Poly> F, const ParametricRings& rings, std::span<const Poly> null0,
                std::span<const Poly> notnull0, const MccgsOptions& opts) {
  BuildResult built = buildtree(F, rings, null0, notnull0, BuildOptions{opts.primes});
  MccgsTree T = gencantree(selectcases(built.leaves, rings), rings, opts);
  T.diagnostics.leaves = built.leaves.size();
  T.diagnostics.certified = T.diagnostics.certified && built.certified;
  return T;
}

std::optional<std::size_t> locate(const MccgsTree& T, std::span<const Rational> alpha) {
  for (std::size_t i = 0; i < T.segments.size(); ++i)
    if (member(alpha, T.segments[i].tree)) return i;
  return std::nullopt;
}

bool check_segment(const Segment& s, std::span<const Poly> F, std::span<const Rational> alpha,
                   const ParametricRings& rings) {
  std::vector<Poly> sf;
  for (const auto& f : F) sf.push_back(evaluate_params(f, alpha, rings));
  return specialize_basis(s.B, alpha, rings) == reduced_gb(sf);
}

std::string lpps_to_string(const std::vector<Monomial>& lpps, const ParametricRings& rings) {
  std::string out = "[";
  for (std::size_t i = 0; i < lpps.size(); ++i) {
    if (i) out += ", ";
    out += Poly::monomial(rings.full, lpps[i], 1).to_string();
  }
  return out + "]";
}

}  // namespace mccgs
