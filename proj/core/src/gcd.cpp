#include "mccgs/polyring.hpp"

namespace mccgs {

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (q.is_constant()) return p.scaled(1 / q.constant_value());
  Poly r = p;
  std::vector<Term> quot;
  const Monomial& qm = q.lm();
  const Rational& qc = q.lc();
  while (!r.is_zero()) {
    if (!qm.divides(r.lm())) return std::nullopt;
    Monomial m = qm.quotient_of(r.lm());
    Rational c = r.lc() / qc;
    r = r.sub_scaled(q, m, c);
    quot.push_back({m, c});
  }
  return Poly(p.ring(), std::move(quot));
}

namespace {

// Pseudo-remainder of a by b with respect to var.
Poly prem(Poly a, const Poly& b, std::size_t var) {
  int db = b.degree(var);
  auto bc = b.coefficients_in(var);
  Poly lb = bc.back();
  Monomial xv;
  while (!a.is_zero() && a.degree(var) >= db) {
    int da = a.degree(var);
    Poly la = a.coefficients_in(var).back();
    xv = Monomial{};
    xv.set(var, da - db);
    a = a * lb - (la * b).times_term(xv, 1);
  }
  return a;
}

Poly primitive_in(const Poly& p, std::size_t var) {
  Poly c = content_in(p, var);
  return divide_exact(p, c)->normalized();
}

// Univariate image of p: every variable but var set to small integers.
Poly image(const Poly& p, std::size_t var, const std::vector<int>& pt) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (std::size_t v = 0; v < pt.size(); ++v) {
      if (v == var) continue;
      for (int e = 0; e < t.mono[v]; ++e) c *= pt[v];
    }
    Monomial m;
    m.set(var, t.mono[var]);
    out.push_back({m, c});
  }
  return Poly(p.ring(), std::move(out));
}

// True when an image at a point keeping both degrees in var proves that the
// gcd of a and b has degree zero in var.
bool coprime_image(const Poly& a, const Poly& b, std::size_t var) {
  std::size_t n = a.ring()->nvars();
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<int> pt(n);
    for (std::size_t v = 0; v < n; ++v) pt[v] = static_cast<int>((v * 7 + 3 + attempt * 13) % 23) - 11;
    Poly ia = image(a, var, pt), ib = image(b, var, pt);
    if (ia.degree(var) != a.degree(var) || ib.degree(var) != b.degree(var)) continue;
    while (!ib.is_zero()) {
      Poly r = ia;
      int db = ib.degree(var);
      Rational lb = ib.lc();
      while (!r.is_zero() && r.degree(var) >= db) {
        Monomial m;
        m.set(var, r.degree(var) - db);
        r = r.sub_scaled(ib, m, r.lc() / lb);
      }
      ia = std::move(ib);
      ib = r.is_zero() ? r : r.monic();
    }
    return ia.degree(var) == 0;
  }
  return false;
}

Poly gcd_rec(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  if (p.is_constant() || q.is_constant()) return Poly(p.ring(), 1);
  auto n = p.ring()->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    bool ip = p.involves(v), iq = q.involves(v);
    if (ip && !iq) return gcd_rec(content_in(p, v), q);
    if (iq && !ip) return gcd_rec(p, content_in(q, v));
  }
  std::size_t var = n;
  int best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!p.involves(v)) continue;
    int d = std::min(p.degree(v), q.degree(v));
    if (var == n || d < best) {
      var = v;
      best = d;
    }
  }
  Poly cp = content_in(p, var), cq = content_in(q, var);
  Poly c = gcd_rec(cp, cq);
  Poly a = *divide_exact(p, cp), b = *divide_exact(q, cq);
  if (coprime_image(a, b, var)) return c;
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  while (true) {
    Poly r = prem(a, b, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0 || !r.involves(var)) {
      b = Poly(p.ring(), 1);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, var);
  }
  if (!b.is_constant()) b = primitive_in(b, var);
  return (c * b).normalized();
}

}  // namespace

Poly content_in(const Poly& p, std::size_t var) {
  auto cs = p.coefficients_in(var);
  Poly g(p.ring());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.normalized() : gcd_rec(g, c);
    if (g.is_constant()) return Poly(p.ring(), 1);
  }
  return g.is_zero() ? Poly(p.ring(), 1) : g;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.ring() != q.ring() && !p.ring()->same_as(*q.ring()))
    throw std::invalid_argument("gcd of polynomials from different rings");
  return gcd_rec(p, q);
}

Poly gcd(std::span<const Poly> polys) {
  if (polys.empty()) throw std::invalid_argument("gcd of an empty list");
  Poly g(polys[0].ring());
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

Poly lcm(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly(p.ring());
  return (*divide_exact(p * q, gcd(p, q))).normalized();
}

}  // namespace mccgs
