#include "mccgs/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace mccgs {

Poly normal_form(const Poly& f, std::span<const Poly> G) {
  if (f.is_zero() || G.empty()) return f;
  Poly r = f;
  std::vector<Term> rem;
  while (!r.is_zero()) {
    const Monomial& m = r.lm();
    const Poly* div = nullptr;
    for (const auto& g : G)
      if (g.lm().divides(m)) {
        div = &g;
        break;
      }
    if (div) {
      r = r.sub_scaled(*div, div->lm().quotient_of(m), r.lc() / div->lc());
    } else {
      rem.push_back(r.lt());
      r = r.tail();
    }
  }
  return Poly(f.ring(), std::move(rem));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = f.lm().lcm(g.lm());
  Poly a = f.times_term(f.lm().quotient_of(l), 1 / f.lc());
  return a.sub_scaled(g, g.lm().quotient_of(l), 1 / g.lc());
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, GbStats* stats) : ring_(std::move(ring)), stats_(stats) {}

  // Returns false when a nonzero constant appeared.
  bool add(Poly h) {
    h = h.normalized();
    if (h.is_constant()) return false;
    std::size_t k = G_.size();
    G_.push_back(std::move(h));
    active_.push_back(true);
    update(k);
    return true;
  }

  bool run() {
    const auto& ord = ring_->order();
    while (!P_.empty()) {
      std::size_t best = 0;
      for (std::size_t t = 1; t < P_.size(); ++t)
        if (ord.compare(P_[t].lcm, P_[best].lcm) < 0) best = t;
      Pair p = P_[best];
      P_.erase(P_.begin() + static_cast<std::ptrdiff_t>(best));
      if (stats_) ++stats_->pairs_reduced;
      Poly s = normal_form(s_polynomial(G_[p.i], G_[p.j]), active_basis());
      if (s.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (!add(std::move(s))) return false;
    }
    return true;
  }

  std::vector<Poly> active_basis() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < G_.size(); ++i)
      if (active_[i]) out.push_back(G_[i]);
    return out;
  }

 private:
  // Gebauer-Möller installation of the pairs created by G_[k].
  void update(std::size_t k) {
    const Monomial& hk = G_[k].lm();
    std::vector<Pair> C;
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i]) C.push_back({i, k, G_[i].lm().lcm(hk)});
    if (stats_) stats_->pairs_considered += C.size();
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = G_[p.i].lm().coprime(hk);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const auto& p : D)
      if (!G_[p.i].lm().coprime(hk)) E.push_back(p);
    std::vector<Pair> kept;
    for (const auto& p : P_) {
      bool drop = hk.divides(p.lcm) && G_[p.i].lm().lcm(hk) != p.lcm && G_[p.j].lm().lcm(hk) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    P_ = std::move(kept);
    P_.insert(P_.end(), E.begin(), E.end());
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && hk.divides(G_[i].lm())) active_[i] = false;
  }

  RingPtr ring_;
  GbStats* stats_;
  std::vector<Poly> G_;
  std::vector<bool> active_;
  std::vector<Pair> P_;
};

std::vector<Poly> interreduce(std::vector<Poly> G) {
  const auto& ord = G.front().ring()->order();
  std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  std::vector<Poly> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.lm().divides(g.lm())) redundant = true;
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly lead = Poly::monomial(minimal[i].ring(), minimal[i].lm(), minimal[i].lc());
    out.push_back((lead + normal_form(minimal[i].tail(), others)).normalized());
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return ord.compare(a.lm(), b.lm()) > 0; });
  return out;
}

}  // namespace

std::vector<Poly> reduced_gb(std::span<const Poly> F, GbStats* stats) {
  std::vector<Poly> gens;
  for (const auto& f : F)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) return {};
  RingPtr ring = gens.front().ring();
  for (const auto& g : gens)
    if (g.is_constant()) return {Poly(ring, 1)};
  Buchberger bb(ring, stats);
  for (auto& g : gens) {
    Poly r = normal_form(g, bb.active_basis());
    if (r.is_zero()) continue;
    if (!bb.add(r)) return {Poly(ring, 1)};
  }
  if (!bb.run()) return {Poly(ring, 1)};
  return interreduce(bb.active_basis());
}

bool is_groebner(std::span<const Poly> G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

RingPtr with_leading_vars(const RingPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> names = extra;
  names.insert(names.end(), base->names().begin(), base->names().end());
  std::size_t k = extra.size();
  std::vector<OrderBlock> blocks{{0, k, OrderKind::Lex}};
  for (const auto& b : base->order().block_list())
    if (b.end > b.begin) blocks.push_back({b.begin + k, b.end + k, b.kind});
  return make_ring(std::move(names), TermOrder::blocks(std::move(blocks)));
}

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) g = g.in_ring(ring_);
  gb_ = reduced_gb(generators);
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one(ring, 1);
  return from_reduced_gb(std::move(ring), {one});
}

Ideal Ideal::from_reduced_gb(RingPtr ring, std::vector<Poly> gb) {
  Ideal I;
  I.ring_ = std::move(ring);
  I.gb_ = std::move(gb);
  return I;
}

bool Ideal::contains(const Ideal& other) const {
  if (is_unit()) return true;
  for (const auto& g : other.gb_)
    if (!contains(g)) return false;
  return true;
}

Ideal Ideal::operator+(const Ideal& other) const { return plus(other.gb_); }

Ideal Ideal::plus(const Poly& f) const { return plus(std::span<const Poly>(&f, 1)); }

Ideal Ideal::plus(std::span<const Poly> fs) const {
  if (is_unit()) return *this;
  std::vector<Poly> gens = gb_;
  bool changed = false;
  for (const auto& f : fs) {
    Poly g = f.in_ring(ring_);
    if (!normal_form(g, gb_).is_zero()) {
      gens.push_back(g);
      changed = true;
    }
  }
  if (!changed) return *this;
  return Ideal(ring_, std::move(gens));
}

bool Ideal::operator==(const Ideal& other) const {
  if (gb_.size() != other.gb_.size()) return false;
  for (std::size_t i = 0; i < gb_.size(); ++i)
    if (gb_[i] != other.gb_[i].in_ring(ring_)) return false;
  return true;
}

std::string Ideal::to_string() const {
  if (gb_.empty()) return "<0>";
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gb_.size(); ++i) os << (i ? ", " : "") << gb_[i];
  os << ">";
  return os.str();
}

namespace {

std::vector<Poly> eliminate_leading(const RingPtr& big, const std::vector<Poly>& gens, std::size_t k,
                                    const RingPtr& base) {
  std::vector<Poly> out;
  for (const auto& g : reduced_gb(gens)) {
    bool uses_aux = false;
    for (std::size_t v = 0; v < k; ++v) uses_aux = uses_aux || g.involves(v);
    if (!uses_aux) out.push_back(g.in_ring(base));
  }
  (void)big;
  return out;
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  RingPtr big = with_leading_vars(I.ring(), {"@t"});
  Poly t = Poly::variable(big, 0);
  Poly one_minus_t = Poly(big, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : I.gb()) gens.push_back(t * f.in_ring(big));
  for (const auto& g : J.gb()) gens.push_back(one_minus_t * g.in_ring(big));
  return Ideal::from_reduced_gb(I.ring(), eliminate_leading(big, gens, 1, I.ring()));
}

Ideal saturate(const Ideal& I, const Poly& h) {
  if (h.is_zero()) throw std::invalid_argument("saturation by zero");
  if (I.is_unit() || h.is_constant()) return I;
  RingPtr big = with_leading_vars(I.ring(), {"@w"});
  Poly w = Poly::variable(big, 0);
  std::vector<Poly> gens;
  for (const auto& f : I.gb()) gens.push_back(f.in_ring(big));
  gens.push_back(Poly(big, 1) - w * h.in_ring(big));
  return Ideal::from_reduced_gb(I.ring(), eliminate_leading(big, gens, 1, I.ring()));
}

bool radical_member(const Poly& f, const Ideal& I) {
  if (I.is_unit()) return true;
  Poly g = f.in_ring(I.ring());
  if (g.is_zero() || I.contains(g)) return true;
  if (g.is_constant()) return false;
  RingPtr big = with_leading_vars(I.ring(), {"@w"});
  Poly w = Poly::variable(big, 0);
  std::vector<Poly> gens;
  for (const auto& p : I.gb()) gens.push_back(p.in_ring(big));
  gens.push_back(Poly(big, 1) - w * g.in_ring(big));
  auto gb = reduced_gb(gens);
  return gb.size() == 1 && gb[0].is_constant();
}

}  // namespace mccgs
