#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

#include "mccgs/primdec.hpp"

namespace mccgs {

namespace {

// ------------------------------------------------------ dense Z_p[t] helpers

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // index = degree, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 pw(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) { return pw(a, p - 2, p); }

ModPoly sub(ModPoly a, const ModPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// a = q*b + r
void divmod(ModPoly a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  u64 il = inv(b.back(), p);
  ModPoly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    u64 c = a.back() * il % p;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
    trim(a);
  }
  trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(a);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

ModPoly make_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  u64 il = inv(a.back(), p);
  for (auto& c : a) c = c * il % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly ns = sub(s0, mul(q, s1, p), p), nt = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  u64 il = inv(r0.back(), p);
  for (auto& c : s0) c = c * il % p;
  for (auto& c : t0) c = c * il % p;
  *s = s0;
  *t = t0;
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

ModPoly derivative(const ModPoly& a, u64 p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

ModPoly reduce_mod(const std::vector<Integer>& f, u64 p) {
  ModPoly r(f.size());
  Integer t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

// Cantor-Zassenhaus: distinct-degree then equal-degree splitting of a
// monic squarefree polynomial.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> dd;
  ModPoly x{0, 1}, h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      dd.emplace_back(g, d);
      ModPoly q;
      divmod(f, g, p, &q, nullptr);
      f = q;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) dd.emplace_back(f, deg(f));
  std::vector<ModPoly> out;
  for (auto& [g, d] : dd) {
    std::vector<ModPoly> stack{g};
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    Integer e = (pd - 1) / 2;
    while (!stack.empty()) {
      ModPoly u = stack.back();
      stack.pop_back();
      if (deg(u) == d) {
        out.push_back(make_monic(u, p));
        continue;
      }
      for (;;) {
        ModPoly a(deg(u));
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = sub(powmod(a, e, u, p), ModPoly{1}, p);
        ModPoly c = gcd(u, b, p);
        if (deg(c) > 0 && deg(c) < deg(u)) {
          ModPoly q;
          divmod(u, c, p, &q, nullptr);
          stack.push_back(c);
          stack.push_back(q);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------- dense Z[t] helpers

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly lift(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

void reduce_in_place(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

void symmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> zdiv(ZPoly a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  Integer g = zcontent(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Lifts f = g*h (mod p), g monic, to modulus p^k. f only needs to be known
// modulo p^k.
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, u64 p, const Integer& pk) {
  ModPoly gp = reduce_mod(g, p), hp = reduce_mod(h, p), s, t;
  ext_gcd(gp, hp, p, &s, &t);
  Integer m = static_cast<unsigned long>(p);
  while (m < pk) {
    ZPoly e = f;
    ZPoly gh = zmul(g, h);
    if (e.size() < gh.size()) e.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    trim(e);
    for (auto& c : e) c /= m;  // exact
    ModPoly ep = reduce_mod(e, p);
    if (!ep.empty()) {
      ModPoly te = mul(t, ep, p), q, r;
      divmod(te, gp, p, &q, &r);
      ModPoly dh = sub(mul(s, ep, p), ModPoly{}, p);
      ModPoly qh = mul(q, hp, p);
      if (dh.size() < qh.size()) dh.resize(qh.size(), 0);
      for (std::size_t i = 0; i < qh.size(); ++i) dh[i] = (dh[i] + qh[i]) % p;
      trim(dh);
      ZPoly dg = lift(r), dhz = lift(dh);
      if (g.size() < dg.size()) g.resize(dg.size(), 0);
      for (std::size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
      if (h.size() < dhz.size()) h.resize(dhz.size(), 0);
      for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
    }
    m *= static_cast<unsigned long>(p);
    Integer mm = std::min(m, pk);
    reduce_in_place(g, mm);
    reduce_in_place(h, mm);
  }
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Integer>> factor_univariate_z(const std::vector<Integer>& input, std::size_t max_subsets,
                                                      bool* certified) {
  ZPoly f = zprimitive(input);
  trim(f);
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // choose the prime giving the fewest modular factors among a few candidates
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (u64 p = 11; good < 5 && p < 100000; p += 2) {
    if (!is_prime_u64(p)) continue;
    ModPoly fp = reduce_mod(f, p);
    if (deg(fp) != n) continue;
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    ++good;
    auto fac = factor_mod_p(make_monic(fp, p), p, rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) {
    if (certified) *certified = false;
    return {f};
  }
  if (best.size() == 1) return {f};
  u64 p = best_p;
  // Mignotte-style bound on factor coefficients
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer lc = abs(f.back());
  Integer bound = maxc * lc * (Integer(1) << static_cast<unsigned>(n)) * Integer(n + 2);
  Integer pk = static_cast<unsigned long>(p);
  while (pk <= 2 * bound) pk *= static_cast<unsigned long>(p);

  // lift f = lc * g1 * ... * gr
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  reduce_in_place(rest, pk);
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ZPoly g = lift(best[i]);
    ModPoly hp = reduce_mod(rest, p), hq;
    divmod(hp, best[i], p, &hq, nullptr);
    ZPoly h = lift(hq);
    hensel_lift(rest, g, h, p, pk);
    lifted.push_back(g);
    rest = h;
  }
  {
    // last factor: make monic modulo pk
    Integer lcinv;
    mpz_invert(lcinv.get_mpz_t(), rest.back().get_mpz_t(), pk.get_mpz_t());
    for (auto& c : rest) c *= lcinv;
    reduce_in_place(rest, pk);
    lifted.push_back(rest);
  }

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t tried = 0;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (++tried > max_subsets) {
        if (certified) *certified = false;
        result.push_back(zprimitive(cur));
        return result;
      }
      ZPoly cand{cur.back()};
      for (auto i : idx) {
        cand = zmul(cand, pool[i]);
        reduce_in_place(cand, pk);
      }
      symmetric(cand, pk);
      cand = zprimitive(cand);
      auto q = zdiv(cur, cand);
      if (q) {
        result.push_back(cand);
        cur = zprimitive(*q);
        std::vector<ZPoly> np;
        for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          np.push_back(pool[i]);
        }
        pool = std::move(np);
        found = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (cur.size() > 1) result.push_back(zprimitive(cur));
  return result;
}

// ------------------------------------------------------------ multivariate

Poly Factorization::expand(const RingPtr& ring) const {
  Poly r(ring, unit);
  for (const auto& [f, m] : factors) r *= f.in_ring(ring).pow(static_cast<unsigned>(m));
  return r;
}

namespace {

Poly var_power(const RingPtr& R, std::size_t v, int e) {
  Monomial m;
  m.set(v, e);
  return Poly::monomial(R, m, 1);
}

// Yun's algorithm in var for a polynomial primitive in var.
std::vector<std::pair<Poly, int>> yun(const Poly& f, std::size_t var) {
  std::vector<std::pair<Poly, int>> out;
  Poly fd = f.derivative(var);
  Poly a = gcd(f, fd);
  Poly b = *divide_exact(f, a);
  Poly c = *divide_exact(fd, a);
  Poly d = c - b.derivative(var);
  int i = 1;
  while (!b.is_constant()) {
    Poly g = gcd(b, d);
    if (!g.is_constant()) out.emplace_back(g, i);
    b = *divide_exact(b, g);
    c = *divide_exact(d, g);
    d = c - b.derivative(var);
    ++i;
  }
  return out;
}

class Factorer {
 public:
  Factorer(const FactorOptions& opts, bool split) : opts_(opts), split_(split) {}

  void run(const Poly& q, int mult) {
    if (q.is_constant()) return;
    Poly cur = q;
    const RingPtr& R = q.ring();
    for (std::size_t v = 0; v < R->nvars(); ++v) {
      if (!cur.involves(v)) continue;
      int e = cur.terms().front().mono[v];
      for (const auto& t : cur.terms()) e = std::min(e, t.mono[v]);
      if (e > 0) {
        emit(Poly::variable(R, v), mult * e);
        cur = *divide_exact(cur, var_power(R, v, e));
      }
    }
    auto vars = cur.variables();
    if (vars.empty()) return;
    std::size_t v = vars.front();
    Poly c = content_in(cur, v);
    if (!c.is_constant()) {
      run(c, mult);
      cur = *divide_exact(cur, c);
    }
    for (auto& [s, i] : yun(cur, v)) squarefree_part(s, mult * i);
  }

  std::map<std::string, std::pair<Poly, int>> found;
  bool certified = true;

 private:
  void emit(const Poly& f, int mult) {
    Poly n = f.normalized();
    auto key = n.to_string();
    auto it = found.find(key);
    if (it == found.end()) found.emplace(key, std::make_pair(n, mult));
    else it->second.second += mult;
  }

  void squarefree_part(Poly s, int mult) {
    if (!split_) {
      emit(s, mult);
      return;
    }
    for (auto u : s.variables()) {
      Poly c = content_in(s, u);
      if (!c.is_constant()) {
        run(c, mult);
        s = *divide_exact(s, c);
      }
    }
    if (s.is_constant()) return;
    auto vars = s.variables();
    for (auto u : vars)
      if (s.degree(u) == 1) {
        emit(s, mult);
        return;
      }
    if (vars.size() == 1) {
      for (auto& f : univariate(s, vars[0])) emit(f, mult);
      return;
    }
    if (s.total_degree() > opts_.max_total_degree) {
      certified = false;
      emit(s, mult);
      return;
    }
    for (auto& f : multivariate(s, vars)) emit(f, mult);
  }

  static ZPoly to_dense(const Poly& s, std::size_t var) {
    Poly n = s.normalized();
    ZPoly d(static_cast<std::size_t>(n.degree(var)) + 1, 0);
    for (const auto& t : n.terms()) d[t.mono[var]] = t.coeff.get_num();
    return d;
  }

  static Poly from_dense(const ZPoly& d, const RingPtr& R, std::size_t var) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      Monomial m;
      m.set(var, static_cast<int>(i));
      ts.push_back({m, Rational(d[i])});
    }
    return Poly(R, std::move(ts));
  }

  std::vector<Poly> univariate(const Poly& s, std::size_t var) {
    bool ok = true;
    auto fs = factor_univariate_z(to_dense(s, var), opts_.max_subsets, &ok);
    if (!ok) certified = false;
    std::vector<Poly> out;
    for (auto& f : fs) out.push_back(from_dense(f, s.ring(), var));
    return out;
  }

  std::vector<Poly> multivariate(const Poly& s, const std::vector<std::size_t>& vars) {
    const RingPtr& R = s.ring();
    std::size_t x = vars.front();
    for (auto v : vars)
      if (s.degree(v) < s.degree(x)) x = v;
    Poly L = s.coefficients_in(x).back();
    std::minstd_rand rng(static_cast<unsigned>(s.size() * 131 + s.total_degree()));
    for (int attempt = 0; attempt < 12; ++attempt) {
      int range = 3 + 2 * attempt;
      std::uniform_int_distribution<int> dist(-range, range);
      std::vector<std::pair<std::size_t, int>> point;
      for (auto v : vars)
        if (v != x) point.push_back({v, dist(rng)});
      Poly img = s, Lb = L;
      for (auto [v, b] : point) {
        img = img.substitute(v, Rational(b));
        Lb = Lb.substitute(v, Rational(b));
      }
      if (Lb.is_zero() || img.degree(x) != s.degree(x)) continue;
      if (!gcd(img, img.derivative(x)).is_constant()) continue;
      std::vector<Poly> u = univariate(img, x);
      if (u.size() == 1) return {s};
      // shift so the evaluation point is the origin
      Poly sz = s, Lz = L;
      for (auto [v, b] : point) {
        Poly shift = Poly::variable(R, v) + Poly(R, Rational(b));
        sz = sz.substitute(v, shift);
        Lz = Lz.substitute(v, shift);
      }
      auto unshift = [&](Poly p) {
        for (auto [v, b] : point) p = p.substitute(v, Poly::variable(R, v) - Poly(R, Rational(b)));
        return p;
      };
      auto primitive = [&](const Poly& p) { return divide_exact(p, content_in(p, x))->normalized(); };
      if (auto F = hensel(sz, Lz, x, u)) {
        std::vector<Poly> out;
        for (auto& f : *F) out.push_back(primitive(unshift(f)));
        return out;
      }
      // some image factors are spurious: look for a true factor among subset products
      std::size_t r = u.size(), tried = 0;
      for (std::size_t size = 1; 2 * size <= r; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
          if (++tried > opts_.max_subsets) {
            certified = false;
            return {s};
          }
          Poly A(R, Rational(1)), B(R, Rational(1));
          for (std::size_t i = 0, k = 0; i < r; ++i) {
            if (k < size && idx[k] == i) {
              A *= u[i];
              ++k;
            } else {
              B *= u[i];
            }
          }
          if (auto F = hensel(sz, Lz, x, {A, B})) {
            Poly g = primitive(unshift((*F)[0]));
            auto q = divide_exact(s, g);
            if (q) {
              auto out = split_further(g);
              for (auto& h : split_further(q->normalized())) out.push_back(h);
              return out;
            }
          }
          std::size_t k = size;
          while (k > 0 && idx[k - 1] == r - size + k - 1) --k;
          if (k == 0) break;
          ++idx[k - 1];
          for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
      return {s};
    }
    certified = false;
    return {s};
  }

  std::vector<Poly> split_further(const Poly& g) {
    auto vars = g.variables();
    for (auto u : vars)
      if (g.degree(u) == 1) return {g};
    if (vars.size() == 1) return univariate(g, vars[0]);
    return multivariate(g, vars);
  }

  // Lifts the univariate factors u of s(x, 0) to factors of L^(r-1) s, each
  // with leading coefficient L in x.
  static std::optional<std::vector<Poly>> hensel(const Poly& s, const Poly& L, std::size_t x, std::vector<Poly> u) {
    const RingPtr& R = s.ring();
    std::size_t r = u.size();
    Rational L0 = 0;
    for (const auto& t : L.terms())
      if (t.mono.is_one()) L0 = t.coeff;
    Poly target = s;
    for (std::size_t i = 1; i < r; ++i) target *= L;
    std::vector<Poly> F, inv;
    for (auto& ui : u) {
      ui = ui.scaled(L0 / ui.lc());
      Monomial m;
      m.set(x, ui.degree(x));
      F.push_back(ui.tail() + L * Poly::monomial(R, m, 1));
    }
    for (std::size_t i = 0; i < r; ++i) {
      Poly others(R, Rational(1));
      for (std::size_t j = 0; j < r; ++j)
        if (j != i) others *= u[j];
      auto v = uinverse(others, u[i], x);
      if (!v) return std::nullopt;
      inv.push_back(*v);
    }
    int D = 0;
    for (const auto& t : target.terms()) D = std::max(D, t.mono.degree() - t.mono[x]);
    for (int k = 1; k <= D; ++k) {
      Poly prod(R, Rational(1));
      for (const auto& f : F) prod *= f;
      Poly e = target - prod;
      if (e.is_zero()) return F;
      std::map<std::string, std::pair<Monomial, std::vector<Term>>> parts;
      for (const auto& t : e.terms()) {
        int dz = t.mono.degree() - t.mono[x];
        if (dz < k) return std::nullopt;
        if (dz > k) continue;
        Monomial z = t.mono, xm;
        z.set(x, 0);
        xm.set(x, t.mono[x]);
        auto& slot = parts[std::to_string(z.hash()) + Poly::monomial(R, z, 1).to_string()];
        slot.first = z;
        slot.second.push_back({xm, t.coeff});
      }
      for (auto& [key, part] : parts) {
        Poly c(R, std::move(part.second));
        for (std::size_t i = 0; i < r; ++i) {
          Poly sigma = udivmod(c * inv[i], u[i], x).second;
          if (!sigma.is_zero()) F[i] += sigma.times_term(part.first, 1);
        }
      }
    }
    Poly prod(R, Rational(1));
    for (const auto& f : F) prod *= f;
    if (prod != target) return std::nullopt;
    return F;
  }

  static std::pair<Poly, Poly> udivmod(const Poly& a, const Poly& b, std::size_t x) {
    Poly r = a;
    std::vector<Term> q;
    int db = b.degree(x);
    while (!r.is_zero() && r.degree(x) >= db) {
      Monomial m;
      m.set(x, r.degree(x) - db);
      Rational c = r.lc() / b.lc();
      r = r.sub_scaled(b, m, c);
      q.push_back({m, c});
    }
    return {Poly(a.ring(), std::move(q)), r};
  }

  // s with s * a = 1 modulo m, univariate in x.
  static std::optional<Poly> uinverse(const Poly& a, const Poly& m, std::size_t x) {
    Poly r0 = m, r1 = udivmod(a, m, x).second;
    Poly s0(m.ring()), s1(m.ring(), Rational(1));
    while (!r1.is_zero() && r1.degree(x) > 0) {
      auto [q, r] = udivmod(r0, r1, x);
      Poly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r1.is_zero()) return std::nullopt;
    return s1.scaled(1 / r1.constant_value());
  }

  FactorOptions opts_;
  bool split_;
};

Factorization collect(const Poly& p, Factorer& fz) {
  Factorization out;
  if (p.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  Poly q = p.normalized();
  out.unit = p.lc() / q.lc();
  fz.run(q, 1);
  for (auto& [k, fm] : fz.found) out.factors.push_back(fm);
  const auto& ord = p.ring()->order();
  std::sort(out.factors.begin(), out.factors.end(), [&](const auto& a, const auto& b) {
    int c = ord.compare(a.first.lm(), b.first.lm());
    if (c != 0) return c < 0;
    return a.first.to_string() < b.first.to_string();
  });
  // fix the unit so that the product reproduces p exactly
  Poly e(p.ring(), 1);
  for (const auto& [f, m] : out.factors) e *= f.pow(static_cast<unsigned>(m));
  out.unit = p.lc() / e.lc();
  out.certified = fz.certified;
  return out;
}

}  // namespace

Factorization squarefree(const Poly& p) {
  Factorer fz(FactorOptions{}, false);
  auto f = collect(p, fz);
  // merge parts with equal multiplicity
  std::map<int, Poly> by_mult;
  for (auto& [q, m] : f.factors) {
    auto it = by_mult.find(m);
    if (it == by_mult.end()) by_mult.emplace(m, q);
    else it->second = (it->second * q).normalized();
  }
  Factorization out;
  out.unit = f.unit;
  for (auto& [m, q] : by_mult) out.factors.emplace_back(q, m);
  Poly e(p.ring(), 1);
  for (const auto& [q, m] : out.factors) e *= q.pow(static_cast<unsigned>(m));
  out.unit = p.lc() / e.lc();
  return out;
}

Factorization factor(const Poly& p, const FactorOptions& opts) {
  thread_local std::map<std::string, Factorization> memo;
  std::string key;
  for (const auto& nm : p.ring()->names()) key += nm + ",";
  key += std::to_string(opts.max_total_degree) + ":" + std::to_string(opts.max_subsets) + "|" + p.to_string();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Factorer fz(opts, true);
  Factorization f = collect(p, fz);
  if (memo.size() > 50000) memo.clear();
  memo.emplace(std::move(key), f);
  return f;
}

}  // namespace mccgs
