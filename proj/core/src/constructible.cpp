#include "mccgs/constructible.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace mccgs {

Poly RedSpec::h() const {
  Poly r(N.ring(), 1);
  for (const auto& w : W) r *= w.in_ring(N.ring());
  return r;
}

bool RedSpec::contains(std::span<const Rational> alpha) const {
  for (const auto& g : N.gb())
    if (g.evaluate(alpha) != 0) return false;
  return h().evaluate(alpha) != 0;
}

std::string RedSpec::to_string() const {
  std::ostringstream os;
  os << "(" << N.to_string() << ", {";
  for (std::size_t i = 0; i < W.size(); ++i) os << (i ? ", " : "") << W[i];
  os << "})";
  return os.str();
}

DiffSpec red_to_diff(const RedSpec& s) { return {s.N, s.N.plus(s.h())}; }

PNode pad_node(const RingPtr& ring) {
  PNode p;
  p.ideal = Ideal::unit(ring);
  p.pad = true;
  return p;
}

PTree difftocantree(const Ideal& I, const Ideal& J, const PrimeOptions& opts) {
  PTree t;
  t.ring = I.ring();
  auto top = minimal_primes(I, opts);
  t.certified = top.certified;
  for (const auto& P : top.components) {
    if (P.contains(J)) continue;
    PNode node;
    node.ideal = P;
    Ideal JP = P + J;
    if (JP.is_unit()) {
      node.children.push_back(pad_node(t.ring));
    } else {
      auto sub = minimal_primes(JP, opts);
      if (!sub.certified) t.certified = false;
      for (const auto& Q : sub.components) node.children.push_back(PNode{Q, false, {}});
    }
    t.children.push_back(std::move(node));
  }
  sort_tree(t);
  return t;
}

void simplifysons(PNode& v) {
  if (v.pad) return;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.children.size() && !changed; ++i) {
      PNode& c = v.children[i];
      if (c.pad) continue;
      for (std::size_t j = 0; j < c.children.size(); ++j) {
        PNode& g = c.children[j];
        if (g.pad || g.ideal != c.ideal) continue;
        std::vector<PNode> lifted = std::move(g.children);
        v.children.erase(v.children.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& l : lifted) v.children.push_back(std::move(l));
        changed = true;
        break;
      }
    }
  }
  std::vector<bool> drop(v.children.size(), false);
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    for (std::size_t j = 0; j < v.children.size() && !drop[i]; ++j) {
      if (i == j) continue;
      const auto &a = v.children[i], &b = v.children[j];
      if (!a.ideal.contains(b.ideal)) continue;
      drop[i] = b.ideal.contains(a.ideal) ? j < i : true;
    }
  }
  std::vector<PNode> kept;
  for (std::size_t i = 0; i < v.children.size(); ++i)
    if (!drop[i]) kept.push_back(std::move(v.children[i]));
  v.children = std::move(kept);
  if (v.children.empty()) v.children.push_back(pad_node(v.ideal.ring()));
}

namespace {

struct AddCtx {
  const RedSpec& s;
  RingPtr ring;
  const PrimeOptions& opts;
  bool certified = true;
};

bool addcase_rec(AddCtx& ctx, PNode* u, std::vector<PNode>& u_children, const Ideal* parent) {
  if (u && u->pad) return true;
  bool test = true;
  for (auto& v : u_children) {
    if (v.pad) continue;
    for (auto& w : v.children)
      if (!w.pad && !addcase_rec(ctx, &w, w.children, &v.ideal)) test = false;
    simplifysons(v);
  }
  if (!test) return false;
  Ideal Pu = u ? u->ideal : Ideal::zero(ctx.ring);
  Ideal R = ctx.s.N + Pu;
  Ideal S = R.plus(ctx.s.h());
  PTree t = difftocantree(R, S, ctx.opts);
  if (!t.certified) ctx.certified = false;
  for (auto& c : t.children) u_children.push_back(std::move(c));
  return !(parent && ctx.s.N.contains(*parent));
}

void sort_children(std::vector<PNode>& cs) {
  for (auto& c : cs) sort_children(c.children);
  std::sort(cs.begin(), cs.end(), [](const PNode& a, const PNode& b) {
    if (a.pad != b.pad) return b.pad;
    return ideal_less(a.ideal, b.ideal);
  });
}

bool nodes_equal(const std::vector<PNode>& a, const std::vector<PNode>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].pad != b[i].pad) return false;
    if (!a[i].pad && a[i].ideal != b[i].ideal) return false;
    if (!nodes_equal(a[i].children, b[i].children)) return false;
  }
  return true;
}

// Builds the canonical tree from the generic-point stratification: the
// membership of points of V(R) in S is constant off the proper closed subset
// Z(R) collected from the case list.
class Canonicalizer {
 public:
  Canonicalizer(const std::vector<RedSpec>& l, RingPtr ring, const PrimeOptions& opts)
      : l_(l), ring_(std::move(ring)), opts_(opts) {
    for (const auto& s : l_) h_.push_back(s.h());
  }

  PTree build() {
    PTree T;
    T.ring = ring_;
    for (auto& P : closure_of(Ideal::zero(ring_), true)) T.children.push_back(node(P, true));
    T.certified = certified_;
    sort_tree(T);
    return T;
  }

 private:
  bool generic_in_s(const Ideal& R) {
    for (std::size_t k = 0; k < l_.size(); ++k)
      if (R.contains(l_[k].N) && !R.contains(h_[k])) return true;
    return false;
  }

  std::vector<Ideal> boundary(const Ideal& R) {
    auto key = R.to_string();
    auto it = boundary_memo_.find(key);
    if (it != boundary_memo_.end()) return it->second;
    std::vector<Ideal> comps;
    for (std::size_t k = 0; k < l_.size(); ++k) {
      Ideal Q;
      if (!R.contains(l_[k].N)) Q = R + l_[k].N;
      else if (!R.contains(h_[k])) Q = R.plus(h_[k]);
      else continue;
      if (Q.is_unit()) continue;
      auto mp = minimal_primes(Q, opts_);
      if (!mp.certified) certified_ = false;
      for (auto& P : mp.components) comps.push_back(P);
    }
    comps = irredundant(std::move(comps));
    boundary_memo_.emplace(key, comps);
    return comps;
  }

  // Irreducible components of the closure of V(R) ∩ S (or of its complement).
  std::vector<Ideal> closure_of(const Ideal& R, bool want_s) {
    auto key = R.to_string() + (want_s ? "|S" : "|C");
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Ideal> out;
    if (generic_in_s(R) == want_s) {
      out.push_back(R);
    } else {
      for (auto& Q : boundary(R))
        for (auto& P : closure_of(Q, want_s)) out.push_back(P);
      out = irredundant(std::move(out));
    }
    memo_.emplace(key, out);
    return out;
  }

  PNode node(const Ideal& P, bool odd) {
    PNode n;
    n.ideal = P;
    std::vector<Ideal> kids;
    for (auto& Q : boundary(P))
      for (auto& K : closure_of(Q, !odd)) kids.push_back(K);
    kids = irredundant(std::move(kids));
    for (auto& K : kids) n.children.push_back(node(K, !odd));
    if (odd && n.children.empty()) n.children.push_back(pad_node(ring_));
    return n;
  }

  const std::vector<RedSpec>& l_;
  RingPtr ring_;
  const PrimeOptions& opts_;
  std::vector<Poly> h_;
  std::map<std::string, std::vector<Ideal>> memo_, boundary_memo_;
  bool certified_ = true;
};

}  // namespace

bool addcase(const RedSpec& s, PTree& T, const std::vector<std::size_t>& path, const PrimeOptions& opts) {
  if (path.size() % 2 != 0) throw std::invalid_argument("addcase vertex must be the root or at even level");
  AddCtx ctx{s, T.ring, opts};
  std::vector<PNode>* children = &T.children;
  PNode* u = nullptr;
  const Ideal* parent = nullptr;
  for (auto idx : path) {
    if (idx >= children->size()) throw std::out_of_range("addcase path");
    if (u) parent = &u->ideal;
    u = &(*children)[idx];
    children = &u->children;
  }
  bool r = addcase_rec(ctx, u, *children, parent);
  if (!ctx.certified) T.certified = false;
  return r;
}

PTree gcs_addcase(const std::vector<RedSpec>& l, const RingPtr& ring, const PrimeOptions& opts) {
  PTree T;
  T.ring = ring;
  for (const auto& s : l) addcase(s, T, {}, opts);
  sort_tree(T);
  return T;
}

PTree gcs(const std::vector<RedSpec>& l, const RingPtr& ring, const PrimeOptions& opts, bool* addcase_agreed) {
  PTree T = Canonicalizer(l, ring, opts).build();
  if (addcase_agreed) *addcase_agreed = tree_equal(gcs_addcase(l, ring, opts), T);
  return T;
}

bool member(std::span<const Rational> alpha, const PNode& v) {
  if (v.pad) return false;
  for (const auto& g : v.ideal.gb())
    if (g.evaluate(alpha) != 0) return false;
  for (const auto& c : v.children)
    if (member(alpha, c)) return false;
  return true;
}

bool member(std::span<const Rational> alpha, const PTree& T) {
  if (T.ring && alpha.size() != T.ring->nvars()) throw std::invalid_argument("point dimension mismatch");
  for (const auto& c : T.children)
    if (member(alpha, c)) return true;
  return false;
}

Ideal closure(const PTree& T) {
  if (T.children.empty()) return Ideal::unit(T.ring);
  Ideal X = T.children[0].ideal;
  for (std::size_t i = 1; i < T.children.size(); ++i) X = intersect(X, T.children[i].ideal);
  return X;
}

void sort_tree(PTree& T) { sort_children(T.children); }

bool tree_equal(const PTree& a, const PTree& b) {
  PTree x = a, y = b;
  sort_tree(x);
  sort_tree(y);
  return nodes_equal(x.children, y.children);
}

std::vector<std::string> check_structure(const PTree& T) {
  std::vector<std::string> out;
  std::function<void(const std::vector<PNode>&, const Ideal*, int)> walk = [&](const std::vector<PNode>& cs,
                                                                                const Ideal* parent, int level) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      if (c.pad) {
        if (level % 2 != 0) out.push_back("padding vertex at odd level");
        if (cs.size() != 1) out.push_back("padding vertex with siblings");
        if (!c.children.empty()) out.push_back("padding vertex with children");
        continue;
      }
      if (parent && (!c.ideal.contains(*parent) || parent->contains(c.ideal)))
        out.push_back("arc " + parent->to_string() + " -> " + c.ideal.to_string() + " is not a strict inclusion");
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (i != j && !cs[j].pad && c.ideal.contains(cs[j].ideal))
          out.push_back("siblings " + cs[j].ideal.to_string() + " and " + c.ideal.to_string() + " are redundant");
      if (c.children.empty() && level % 2 != 0) out.push_back("odd-length path ending at " + c.ideal.to_string());
      walk(c.children, &c.ideal, level + 1);
    }
  };
  walk(T.children, nullptr, 1);
  return out;
}

namespace {

void render(std::ostringstream& os, const std::vector<PNode>& cs) {
  os << "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << ", ";
    if (cs[i].pad) {
      os << "[1]";
      continue;
    }
    os << cs[i].ideal.to_string();
    if (!cs[i].children.empty()) {
      os << " -> ";
      render(os, cs[i].children);
    }
  }
  os << "}";
}

}  // namespace

std::string tree_to_string(const PTree& T) {
  std::ostringstream os;
  render(os, T.children);
  return os.str();
}

}  // namespace mccgs
