#include "mccgs/sampling.hpp"

#include <algorithm>

#include "mccgs/primdec.hpp"

namespace mccgs {

Rational PointSampler::random_rational() {
  std::uniform_int_distribution<int> num(-height_, height_), den(1, 3);
  Rational r(num(rng_), den(rng_));
  r.canonicalize();
  return r;
}

std::vector<Rational> PointSampler::random_point(std::size_t m) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < m; ++i) p.push_back(random_rational());
  return p;
}

std::vector<Rational> rational_roots(const Poly& f, std::size_t var) {
  std::vector<Rational> out;
  if (f.is_zero() || f.is_constant()) return out;
  auto F = factor(f, FactorOptions{});
  for (const auto& [q, m] : F.factors) {
    if (q.degree(var) != 1 || q.variables().size() != 1) continue;
    auto cs = q.coefficients_in(var);
    Rational c0 = cs[0].is_zero() ? Rational(0) : cs[0].constant_value();
    out.push_back(-c0 / cs[1].constant_value());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Rational>> PointSampler::point_on(const Ideal& P, int attempts) {
  const RingPtr& R = P.ring();
  std::size_t n = R->nvars();
  if (P.is_unit()) return std::nullopt;
  auto L = make_ring(R->names(), OrderKind::Lex);
  std::vector<Poly> gens;
  for (const auto& g : P.gb()) gens.push_back(g.in_ring(L));
  auto G = reduced_gb(gens);
  for (int a = 0; a < attempts; ++a) {
    std::vector<Rational> pt(n, 0);
    bool ok = true;
    for (std::size_t v = n; v-- > 0 && ok;) {
      // basis elements whose lex-leading variable is v
      Poly acc(L);
      bool any = false;
      for (const auto& g : G) {
        auto vs = g.variables();
        if (vs.empty() || vs.front() != v) continue;
        Poly s = g;
        for (std::size_t w = v + 1; w < n; ++w) s = s.substitute(w, pt[w]);
        acc = any ? gcd(acc, s) : s;
        any = true;
      }
      if (!any) {
        pt[v] = random_rational();
        continue;
      }
      if (acc.is_zero()) {
        pt[v] = random_rational();
        continue;
      }
      auto roots = rational_roots(acc, v);
      if (roots.empty()) {
        ok = false;
        break;
      }
      pt[v] = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng_)];
    }
    if (!ok) continue;
    bool on = true;
    for (const auto& g : P.gb()) on = on && g.evaluate(pt) == 0;
    if (on) return pt;
  }
  return std::nullopt;
}

}  // namespace mccgs
