#include "mccgs/cgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace mccgs {

namespace {

// Polynomial in K[a][x]: x-monomials of the full ring with parameter-ring
// coefficients, descending.
struct PTerm {
  Monomial x;
  Poly c;
};
using PPoly = std::vector<PTerm>;

struct Ctx {
  const ParametricRings& R;
  std::size_t n;
  std::size_t m;
  const TermOrder& ord;

  explicit Ctx(const ParametricRings& r)
      : R(r), n(r.space.nvars()), m(r.space.nparams()), ord(r.full->order()) {}

  PPoly split(const Poly& f) const {
    Poly q = f.in_ring(R.full);
    std::vector<std::pair<Monomial, Term>> parts;
    for (const auto& t : q.terms()) {
      Monomial x, a;
      for (std::size_t i = 0; i < n; ++i) x.set(i, t.mono[i]);
      for (std::size_t i = 0; i < m; ++i) a.set(i, t.mono[n + i]);
      parts.push_back({x, {a, t.coeff}});
    }
    // Terms of q are already descending, so equal x-parts are contiguous
    // only after a stable sort on x.
    std::stable_sort(parts.begin(), parts.end(),
                     [&](const auto& u, const auto& v) { return ord.greater(u.first, v.first); });
    PPoly out;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      std::vector<Term> ts;
      while (j < parts.size() && parts[j].first == parts[i].first) ts.push_back(parts[j++].second);
      out.push_back({parts[i].first, Poly(R.params, std::move(ts))});
      i = j;
    }
    return out;
  }

  Poly join(const PPoly& f) const {
    std::vector<Term> ts;
    for (const auto& [x, c] : f)
      for (const auto& t : c.terms()) {
        Monomial mono = x;
        for (std::size_t i = 0; i < m; ++i) mono.set(n + i, t.mono[i]);
        ts.push_back({mono, t.coeff});
      }
    return Poly(R.full, std::move(ts));
  }

  PPoly sub(const PPoly& a, const PPoly& b) const {
    PPoly out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : ord.compare(a[i].x, b[j].x);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back({b[j].x, -b[j].c});
        ++j;
      } else {
        Poly d = a[i].c - b[j].c;
        if (!d.is_zero()) out.push_back({a[i].x, std::move(d)});
        ++i, ++j;
      }
    }
    return out;
  }

  static PPoly mul(const PPoly& f, const Monomial& x, const Poly& c) {
    PPoly out;
    out.reserve(f.size());
    for (const auto& t : f) out.push_back({t.x * x, t.c * c});
    return out;
  }

  static PPoly mod(const PPoly& f, const WorkingSpec& s) {
    PPoly out;
    for (const auto& t : f) {
      Poly c = s.N.reduce(t.c);
      if (!c.is_zero()) out.push_back({t.x, std::move(c)});
    }
    return out;
  }

  static Poly content(const PPoly& f) {
    std::vector<Poly> cs;
    for (const auto& t : f) cs.push_back(t.c);
    return gcd(cs);
  }

  static PPoly divide(const PPoly& f, const Poly& c) {
    if (c.is_one()) return f;
    PPoly out;
    for (const auto& t : f) {
      auto q = divide_exact(t.c, c);
      if (!q) throw std::logic_error("content does not divide coefficient");
      out.push_back({t.x, std::move(*q)});
    }
    return out;
  }

  // f := (lc(g)/d) f - (t/d) (x/lpp g) g eliminating the term (x, t) of f.
  PPoly reduce_term(const PPoly& f, const PTerm& term, const PPoly& g) const {
    Poly d = gcd(term.c, g.front().c);
    Poly lg = *divide_exact(g.front().c, d);
    Poly tc = *divide_exact(term.c, d);
    Monomial q = g.front().x.quotient_of(term.x);
    return sub(mul(f, Monomial(), lg), mul(g, q, tc));
  }

  PPoly spoly(const PPoly& f, const PPoly& g) const {
    Monomial l = f.front().x.lcm(g.front().x);
    Poly d = gcd(f.front().c, g.front().c);
    Poly lf = *divide_exact(f.front().c, d);
    Poly lg = *divide_exact(g.front().c, d);
    return sub(mul(f, f.front().x.quotient_of(l), lg), mul(g, g.front().x.quotient_of(l), lf));
  }

  // Divides by the content, which is non-null wherever the leading coefficient is.
  static PPoly primitive(const PPoly& f) {
    if (f.empty()) return f;
    PPoly g = divide(f, content(f));
    return g;
  }
};

std::vector<Poly> normalized_factors(const Poly& c, const FactorOptions& fo, bool* certified) {
  std::vector<Poly> out;
  if (c.is_constant()) return out;
  Factorization fac = factor(c, fo);
  if (!fac.certified && certified) *certified = false;
  for (auto& [q, e] : fac.factors) out.push_back(q.normalized());
  return out;
}

bool contains_poly(const std::vector<Poly>& v, const Poly& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

// ---------------------------------------------------------------------------

WorkingSpec WorkingSpec::make(std::vector<Ideal> primes, std::vector<Poly> W, const RingPtr& params) {
  WorkingSpec s;
  std::vector<Poly> ws;
  for (auto& w : W) {
    Poly q = w.in_ring(params).normalized();
    if (!q.is_constant() && !contains_poly(ws, q)) ws.push_back(q);
  }
  std::sort(ws.begin(), ws.end(), [](const Poly& a, const Poly& b) { return a.to_string() < b.to_string(); });
  std::vector<Ideal> kept;
  for (auto& P : primes) {
    bool hit = std::any_of(ws.begin(), ws.end(), [&](const Poly& w) { return P.contains(w); });
    if (!hit && !P.is_unit()) kept.push_back(std::move(P));
  }
  s.primes = irredundant(std::move(kept));
  s.W = std::move(ws);
  if (s.primes.empty()) {
    s.N = Ideal::unit(params);
  } else {
    s.N = s.primes.front();
    for (std::size_t i = 1; i < s.primes.size(); ++i) s.N = intersect(s.N, s.primes[i]);
  }
  return s;
}

Poly WorkingSpec::h() const {
  Poly p(N.ring(), Rational(1));
  for (const auto& w : W) p *= w;
  return p;
}

std::vector<RedSpec> WorkingSpec::prime_cases() const {
  std::vector<RedSpec> out;
  for (const auto& P : primes) out.push_back({P, W});
  return out;
}

bool WorkingSpec::contains(std::span<const Rational> alpha) const {
  if (h().evaluate(alpha) == 0) return false;
  return std::any_of(primes.begin(), primes.end(), [&](const Ideal& P) {
    return std::all_of(P.gb().begin(), P.gb().end(), [&](const Poly& g) { return g.evaluate(alpha) == 0; });
  });
}

Nullity nullity(const Poly& c0, const WorkingSpec& s) {
  Poly c = s.N.reduce(c0);
  if (c.is_zero()) return Nullity::Zero;
  if (c.is_constant()) return Nullity::NonNull;
  Poly h = s.h();
  for (const auto& P : s.primes)
    if (!radical_member(h, P.plus(c))) return Nullity::Undecided;
  return Nullity::NonNull;
}

CoeffVerdict reduce_coeffs(const Poly& f, const WorkingSpec& s, const ParametricRings& rings) {
  Ctx ctx(rings);
  PPoly p = Ctx::mod(ctx.split(f), s);
  CoeffVerdict v;
  while (!p.empty()) {
    Nullity k = nullity(p.front().c, s);
    if (k == Nullity::NonNull) break;
    if (k == Nullity::Undecided) {
      v.branch_coefficient = p.front().c;
      break;
    }
    p.erase(p.begin());
  }
  v.reduced = ctx.join(p);
  return v;
}

std::pair<std::optional<WorkingSpec>, std::optional<WorkingSpec>> branch(const WorkingSpec& s, const Poly& c0,
                                                                          const PrimeOptions& opts,
                                                                          bool* certified) {
  const RingPtr& params = s.N.ring();
  Poly c = s.N.reduce(c0.in_ring(params));
  std::pair<std::optional<WorkingSpec>, std::optional<WorkingSpec>> out;

  std::vector<Poly> W = s.W;
  for (auto& q : normalized_factors(c, opts.factor, certified)) W.push_back(q);
  WorkingSpec nonnull = WorkingSpec::make(s.primes, W, params);
  if (!nonnull.dead()) out.first = std::move(nonnull);

  std::vector<Ideal> primes;
  for (const auto& P : s.primes) {
    PrimeList pl = minimal_primes(P.plus(c), opts);
    if (!pl.certified && certified) *certified = false;
    for (auto& Q : pl.components) primes.push_back(std::move(Q));
  }
  WorkingSpec null = WorkingSpec::make(std::move(primes), s.W, params);
  if (!null.dead()) out.second = std::move(null);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct WP {
  PPoly p;
  std::vector<Poly> hist;
};

struct Item {
  WP f;
  bool pair = false;
  std::size_t i = 0, j = 0;
  Monomial key;
  std::size_t seq = 0;
};

struct State {
  WorkingSpec s;
  std::vector<WP> B;
  std::vector<Item> Q;
  std::size_t seq = 0;
};

class Builder {
 public:
  Builder(const ParametricRings& R, const BuildOptions& opts) : ctx_(R), opts_(opts) {}

  void run(State st) {
    while (!st.Q.empty()) {
      std::size_t k = select(st);
      Item it = std::move(st.Q[k]);
      st.Q.erase(st.Q.begin() + static_cast<std::ptrdiff_t>(k));
      WP f = it.pair ? WP{ctx_.spoly(st.B[it.i].p, st.B[it.j].p), {}} : std::move(it.f);
      if (!process(st, std::move(f))) return;
    }
    finish(st);
  }

  BuildResult result() { return std::move(res_); }

 private:
  std::size_t select(const State& st) const {
    std::size_t best = 0;
    for (std::size_t k = 0; k < st.Q.size(); ++k) {
      const Item& a = st.Q[k];
      const Item& b = st.Q[best];
      if (a.pair != b.pair) {
        if (!a.pair) best = k;
        continue;
      }
      if (!a.pair) {
        if (a.seq < b.seq) best = k;
        continue;
      }
      int c = ctx_.ord.compare(a.key, b.key);
      if (c < 0 || (c == 0 && a.seq < b.seq)) best = k;
    }
    return best;
  }

  // Returns false when the state was handed to children.
  bool process(State& st, WP f) {
    for (;;) {
      f.p = Ctx::mod(f.p, st.s);
      if (f.p.empty()) return true;
      const PPoly* g = nullptr;
      for (const auto& b : st.B)
        if (b.p.front().x.divides(f.p.front().x)) {
          g = &b.p;
          break;
        }
      if (g) {
        f.p = ctx_.reduce_term(f.p, f.p.front(), *g);
        continue;
      }
      Nullity k = nullity(f.p.front().c, st.s);
      if (k == Nullity::Undecided) {
        split(st, std::move(f));
        return false;
      }
      f.p = Ctx::primitive(f.p);
      if (f.p.front().x.is_one()) {
        leaf_unit(st.s);
        return false;
      }
      std::size_t idx = st.B.size();
      for (std::size_t i = 0; i < idx; ++i) {
        const Monomial& a = st.B[i].p.front().x;
        const Monomial& b = f.p.front().x;
        if (a.coprime(b)) continue;
        Item it;
        it.pair = true;
        it.i = i;
        it.j = idx;
        it.key = a.lcm(b);
        it.seq = st.seq++;
        st.Q.push_back(std::move(it));
      }
      st.B.push_back(std::move(f));
      return true;
    }
  }

  void split(State& st, WP f) {
    auto [nonnull, null] = branch(st.s, f.p.front().c, opts_.primes, &res_.certified);
    if (nonnull) {
      State child{*nonnull, st.B, st.Q, st.seq};
      push_front(child, f);
      run(std::move(child));
    }
    if (null) {
      State child;
      child.s = *null;
      auto keep = [&](WP w) {
        Poly full = ctx_.join(w.p).normalized();
        if (!contains_poly(w.hist, full)) w.hist.push_back(full);
        Item it;
        it.f = std::move(w);
        it.seq = child.seq++;
        child.Q.push_back(std::move(it));
      };
      for (const auto& b : st.B) keep(b);
      keep(f);
      for (const auto& it : st.Q)
        if (!it.pair) keep(it.f);
      run(std::move(child));
    }
  }

  static void push_front(State& st, WP f) {
    Item it;
    it.f = std::move(f);
    it.seq = 0;
    for (auto& q : st.Q)
      if (!q.pair) ++q.seq;
    st.Q.push_back(std::move(it));
  }

  void leaf_unit(const WorkingSpec& s) {
    SegmentLeaf L;
    L.B = {Poly(ctx_.R.full, Rational(1))};
    L.spec = s;
    L.lpps = {Monomial()};
    L.ancestors = {{}};
    res_.leaves.push_back(std::move(L));
  }

  void finish(const State& st) {
    std::vector<WP> B;
    for (std::size_t i = 0; i < st.B.size(); ++i) {
      const Monomial& li = st.B[i].p.front().x;
      bool redundant = false;
      for (std::size_t j = 0; j < st.B.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& lj = st.B[j].p.front().x;
        if (lj.divides(li) && (lj != li || j < i)) redundant = true;
      }
      if (!redundant) B.push_back(st.B[i]);
    }
    std::sort(B.begin(), B.end(),
              [&](const WP& a, const WP& b) { return ctx_.ord.greater(a.p.front().x, b.p.front().x); });
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (;;) {
        bool changed = false;
        for (std::size_t t = 1; t < B[i].p.size() && !changed; ++t)
          for (std::size_t j = 0; j < B.size(); ++j) {
            if (j == i || !B[j].p.front().x.divides(B[i].p[t].x)) continue;
            B[i].p = Ctx::primitive(Ctx::mod(ctx_.reduce_term(B[i].p, B[i].p[t], B[j].p), st.s));
            changed = true;
            break;
          }
        if (!changed) break;
      }
    }
    SegmentLeaf L;
    L.spec = st.s;
    for (auto& w : B) {
      Poly g = ctx_.join(Ctx::primitive(Ctx::mod(w.p, st.s))).normalized();
      std::vector<Poly> anc;
      for (const auto& h : w.hist) {
        PPoly hp = ctx_.split(h);
        if (hp.empty() || hp.front().x != w.p.front().x) continue;
        Poly hn = ctx_.join(Ctx::primitive(hp)).normalized();
        if (hn != g && !contains_poly(anc, hn)) anc.push_back(hn);
      }
      L.lpps.push_back(w.p.front().x);
      L.B.push_back(std::move(g));
      L.ancestors.push_back(std::move(anc));
    }
    res_.leaves.push_back(std::move(L));
  }

  Ctx ctx_;
  const BuildOptions& opts_;
  BuildResult res_;
};

}  // namespace

BuildResult buildtree(std::span<const Poly> F, const ParametricRings& rings, std::span<const Poly> null0,
                      std::span<const Poly> notnull0, const BuildOptions& opts) {
  bool certified = true;
  std::vector<Poly> nulls;
  for (const auto& p : null0) nulls.push_back(p.in_ring(rings.params));
  PrimeList pl = minimal_primes(Ideal(rings.params, nulls), opts.primes);
  certified = certified && pl.certified;
  std::vector<Poly> W;
  for (const auto& p : notnull0) {
    Poly q = p.in_ring(rings.params);
    if (q.is_zero()) return {{}, certified};
    for (auto& w : normalized_factors(q, opts.primes.factor, &certified)) W.push_back(w);
  }
  WorkingSpec s0 = WorkingSpec::make(std::move(pl.components), std::move(W), rings.params);
  if (s0.dead()) return {{}, certified};

  Ctx ctx(rings);
  State st;
  st.s = std::move(s0);
  for (const auto& f : F) {
    Item it;
    it.f.p = ctx.split(f);
    if (it.f.p.empty()) continue;
    it.f.hist.push_back(f.in_ring(rings.full).normalized());
    it.seq = st.seq++;
    st.Q.push_back(std::move(it));
  }
  Builder b(rings, opts);
  b.run(std::move(st));
  BuildResult r = b.result();
  r.certified = r.certified && certified;
  return r;
}

bool specializes_well(const Poly& g, const Poly& f, const WorkingSpec& s, const ParametricRings& rings) {
  Ctx ctx(rings);
  PPoly gp = Ctx::mod(ctx.split(g), s);
  PPoly fp = Ctx::mod(ctx.split(f), s);
  if (gp.empty() || fp.empty() || gp.front().x != fp.front().x) return false;
  if (nullity(gp.front().c, s) != Nullity::NonNull) return false;
  if (nullity(fp.front().c, s) != Nullity::NonNull) return false;
  PPoly d = Ctx::mod(ctx.sub(Ctx::mul(gp, Monomial(), fp.front().c), Ctx::mul(fp, Monomial(), gp.front().c)), s);
  return d.empty();
}

bool specializes_well(std::span<const Poly> G, const SegmentLeaf& leaf, const ParametricRings& rings) {
  if (G.size() != leaf.B.size()) return false;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (!specializes_well(G[i], leaf.B[i], leaf.spec, rings)) return false;
  return true;
}

std::vector<Poly> specialize_basis(std::span<const Poly> B, std::span<const Rational> alpha,
                                   const ParametricRings& rings) {
  std::vector<Poly> out;
  for (const auto& b : B) out.push_back(evaluate_params(b, alpha, rings).normalized());
  const TermOrder& ord = rings.vars->order();
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
    return ord.greater(a.lm(), b.lm());
  });
  return out;
}

bool check_against_oracle(const SegmentLeaf& leaf, std::span<const Poly> F, std::span<const Rational> alpha,
                          const ParametricRings& rings) {
  if (!leaf.spec.contains(alpha)) throw std::invalid_argument("point outside the segment");
  std::vector<Poly> sf;
  for (const auto& f : F) sf.push_back(evaluate_params(f, alpha, rings));
  return specialize_basis(leaf.B, alpha, rings) == reduced_gb(sf);
}

std::vector<Monomial> lpp_set(std::span<const Poly> B, const ParametricRings& rings) {
  std::vector<Monomial> out;
  for (const auto& b : B)
    if (!b.is_zero()) out.push_back(leading(b, rings).lpp);
  const TermOrder& ord = rings.full->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(b, a); });
  return out;
}

}  // namespace mccgs
