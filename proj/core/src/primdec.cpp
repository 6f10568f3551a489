#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mccgs/primdec.hpp"

namespace mccgs {

bool ideal_less(const Ideal& a, const Ideal& b) {
  const auto& ga = a.gb();
  const auto& gb = b.gb();
  const auto& ord = a.ring()->order();
  for (std::size_t i = 0; i < std::min(ga.size(), gb.size()); ++i) {
    int c = ord.compare(ga[i].lm(), gb[i].lm());
    if (c != 0) return c > 0;
  }
  if (ga.size() != gb.size()) return ga.size() < gb.size();
  return a.to_string() < b.to_string();
}

std::vector<Ideal> irredundant(std::vector<Ideal> L) {
  std::sort(L.begin(), L.end(), ideal_less);
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < L.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < L.size() && !drop; ++j) {
      if (i == j || !L[i].contains(L[j])) continue;
      // L[i] contains L[j]: drop L[i] unless they are equal and i comes first
      if (L[j].contains(L[i])) drop = j < i;
      else drop = true;
    }
    if (!drop) out.push_back(L[i]);
  }
  return out;
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(const PrimeOptions& opts) : opts_(opts), rng_(opts.seed) {}

  void split(const Ideal& J) {
    if (J.is_unit()) return;
    std::string key = J.to_string();
    if (!seen_.insert(key).second) return;
    if (J.is_zero()) {
      primes_.push_back(J);
      return;
    }
    for (const auto& g : J.gb()) {
      if (g.total_degree() <= 1) continue;
      auto f = factor(g, opts_.factor);
      if (!f.certified) certified_ = false;
      bool reducible = f.factors.size() > 1 || (f.factors.size() == 1 && f.factors[0].second > 1);
      if (!reducible) continue;
      for (const auto& [q, m] : f.factors) split(J.plus(q));
      return;
    }
    certify(J);
  }

  std::vector<Ideal> primes_;
  bool certified_ = true;

 private:
  // Primality test for an ideal whose reduced basis consists of irreducible
  // polynomials, splitting further when a witness is found.
  void certify(const Ideal& J) {
    const RingPtr& R = J.ring();
    std::size_t n = R->nvars();
    auto U = max_independent_set(J);
    std::vector<std::size_t> X;
    for (std::size_t v = 0; v < n; ++v)
      if (std::find(U.begin(), U.end(), v) == U.end()) X.push_back(v);
    if (X.empty()) {
      primes_.push_back(J);
      return;
    }
    // block ring X' >> U
    std::vector<std::string> names;
    for (auto v : X) names.push_back(R->names()[v]);
    for (auto v : U) names.push_back(R->names()[v]);
    std::size_t k = X.size();
    auto B = make_ring(names, TermOrder::blocks({{0, k, OrderKind::Grevlex}, {k, n, OrderKind::Grevlex}}));
    std::vector<Poly> gens;
    for (const auto& g : J.gb()) gens.push_back(g.in_ring(B));
    auto G = reduced_gb(gens);
    // leading x'-monomials and coefficients over Q[U]
    std::vector<Monomial> lms;
    Poly h(B, 1);
    for (const auto& g : G) {
      Monomial xm;
      for (std::size_t i = 0; i < k; ++i) xm.set(i, g.lm()[i]);
      lms.push_back(xm);
      std::vector<Term> coeff;
      for (const auto& t : g.terms()) {
        bool same = true;
        for (std::size_t i = 0; i < k && same; ++i) same = t.mono[i] == xm[i];
        if (!same) continue;
        Monomial um = t.mono;
        for (std::size_t i = 0; i < k; ++i) um.set(i, 0);
        coeff.push_back({um, t.coeff});
      }
      Poly c(B, std::move(coeff));
      if (!c.is_constant()) h = lcm(h, c);
    }
    long d = count_standard(lms, k);
    Poly hb = h.in_ring(R);
    auto finish_prime = [&](bool sure) {
      if (!sure) certified_ = false;
      Ideal P = hb.is_constant() ? J : saturate(J, hb);
      primes_.push_back(P);
      if (!hb.is_constant()) split(J.plus(hb));
    };
    if (d < 0) {
      finish_prime(false);
      return;
    }
    if (d <= 1) {
      finish_prime(true);
      return;
    }
    for (int attempt = 0; attempt < opts_.certification_attempts; ++attempt) {
      // minimal polynomial of a random linear form over Q(U)
      std::vector<std::string> zn;
      for (auto v : X) zn.push_back(R->names()[v]);
      zn.push_back("@z");
      for (auto v : U) zn.push_back(R->names()[v]);
      auto Z = make_ring(zn, TermOrder::blocks({{0, k, OrderKind::Grevlex}, {k, n + 1, OrderKind::Lex}}));
      std::uniform_int_distribution<int> coef(1, 7 + 4 * attempt);
      Poly ell(Z);
      for (std::size_t i = 0; i < k; ++i) ell += Poly::variable(Z, i).scaled(attempt == 0 && i == 0 ? 1 : coef(rng_));
      std::vector<Poly> zg;
      for (const auto& g : J.gb()) zg.push_back(g.in_ring(Z));
      zg.push_back(Poly::variable(Z, k) - ell);
      const Poly* mu = nullptr;
      auto EG = reduced_gb(zg);
      for (const auto& g : EG) {
        bool elim = true;
        for (std::size_t i = 0; i < k && elim; ++i) elim = !g.involves(i);
        if (!elim || !g.involves(k)) continue;
        if (!mu || g.degree(k) < mu->degree(k)) mu = &g;
      }
      if (!mu) break;
      auto F = factor(*mu, opts_.factor);
      if (!F.certified) certified_ = false;
      int red_deg = 0;
      std::size_t nfac = F.factors.size();
      for (const auto& [f, m] : F.factors) red_deg += f.degree(k);
      auto back = [&](const Poly& f) { return f.substitute(k, ell).in_ring(R); };
      if (nfac > 1) {
        for (const auto& [f, m] : F.factors) split(J.plus(back(f)));
        return;
      }
      if (red_deg == d) {
        finish_prime(true);
        return;
      }
      Poly red = back(F.factors[0].first);
      if (!J.contains(red)) {
        split(J.plus(red));
        return;
      }
    }
    finish_prime(false);
  }

  // A maximum-size set of variables independent modulo the leading ideal.
  std::vector<std::size_t> max_independent_set(const Ideal& J) {
    std::size_t n = J.ring()->nvars();
    std::vector<Monomial> lms;
    for (const auto& g : J.gb()) lms.push_back(g.lm());
    std::vector<std::size_t> best;
    std::size_t best_size = 0;
    bool have = false;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::size_t size = static_cast<std::size_t>(__builtin_popcountl(mask));
      if (have && size <= best_size) continue;
      bool ok = true;
      for (const auto& m : lms) {
        bool inside = true;
        for (std::size_t v = 0; v < n && inside; ++v)
          if (m[v] > 0 && !(mask >> v & 1ul)) inside = false;
        if (inside) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      have = true;
      best_size = size;
      best.clear();
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1ul) best.push_back(v);
    }
    return best;
  }

  // Number of monomials in the first k variables outside the monomial ideal,
  // or -1 when infinite or too many.
  static long count_standard(const std::vector<Monomial>& lms, std::size_t k) {
    for (std::size_t v = 0; v < k; ++v) {
      bool pure = false;
      for (const auto& m : lms)
        if (m[v] > 0 && m.degree() == m[v]) pure = true;
      if (!pure) return -1;
    }
    std::vector<Monomial> frontier{Monomial{}};
    std::set<std::vector<int>> seen;
    long count = 0;
    while (!frontier.empty()) {
      Monomial m = frontier.back();
      frontier.pop_back();
      std::vector<int> key(k);
      for (std::size_t i = 0; i < k; ++i) key[i] = m[i];
      if (!seen.insert(key).second) continue;
      bool standard = true;
      for (const auto& l : lms)
        if (l.divides(m)) standard = false;
      if (!standard) continue;
      if (++count > 5000) return -1;
      for (std::size_t i = 0; i < k; ++i) {
        Monomial next = m;
        next.set(i, m[i] + 1);
        frontier.push_back(next);
      }
    }
    return count;
  }

  PrimeOptions opts_;
  std::mt19937 rng_;
  std::set<std::string> seen_;
};

}  // namespace

PrimeList minimal_primes(const Ideal& I, const PrimeOptions& opts) {
  PrimeList out;
  if (I.is_unit()) return out;
  Decomposer d(opts);
  d.split(I);
  out.components = irredundant(d.primes_);
  out.certified = d.certified_;
  return out;
}

}  // namespace mccgs
