#include "mccgs/oracle.hpp"

#include "mccgs/sampling.hpp"

namespace mccgs {

namespace {

std::string point_string(std::span<const Rational> a, const ParametricRings& R) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + R.space.params[i] + "=" + a[i].get_str();
  return s + ")";
}

void collect(const PNode& n, std::vector<Ideal>& out) {
  if (!n.pad) out.push_back(n.ideal);
  for (const auto& c : n.children) collect(c, out);
}

}  // namespace

OracleReport run_oracle(const MccgsTree& T, std::span<const Poly> F, std::span<const Poly> null0,
                        std::span<const Poly> notnull0, std::size_t samples, unsigned seed) {
  const auto& R = T.rings;
  OracleReport rep;
  if (samples == 0) {
    rep.warnings.push_back("no samples requested; the check is vacuous");
    return rep;
  }
  PointSampler ps(seed);
  std::size_t m = R.space.nparams();
  Ideal N(R.params, std::vector<Poly>(null0.begin(), null0.end()));
  std::vector<Ideal> primes{N};
  if (!N.is_zero()) {
    auto pl = minimal_primes(N);
    primes = pl.components;
    if (!pl.certified) rep.warnings.push_back("prime decomposition of the null conditions not certified");
  }

  auto allowed = [&](std::span<const Rational> a) {
    for (const auto& g : null0)
      if (g.evaluate(a) != 0) return false;
    for (const auto& h : notnull0)
      if (h.evaluate(a) == 0) return false;
    return true;
  };

  std::vector<std::vector<Rational>> pts;
  std::size_t random_target = (samples + 1) / 2;
  for (std::size_t tries = 0; pts.size() < random_target && tries < 20 * samples; ++tries) {
    std::optional<std::vector<Rational>> a;
    if (N.is_zero()) {
      a = ps.random_point(m);
    } else if (!primes.empty()) {
      a = ps.point_on(primes[tries % primes.size()]);
    }
    if (a && allowed(*a)) pts.push_back(std::move(*a));
  }
  std::vector<Ideal> ideals;
  for (const auto& s : T.segments)
    for (const auto& c : s.tree.children) collect(c, ideals);
  for (std::size_t tries = 0; pts.size() < samples && !ideals.empty() && tries < 20 * samples; ++tries) {
    auto a = ps.point_on(ideals[tries % ideals.size()]);
    if (a && allowed(*a)) pts.push_back(std::move(*a));
  }
  if (pts.size() < samples)
    rep.warnings.push_back("only " + std::to_string(pts.size()) + " of " + std::to_string(samples) +
                           " points were found in the allowed region");

  for (const auto& a : pts) {
    ++rep.samples;
    std::size_t hits = 0, where = 0;
    for (std::size_t i = 0; i < T.segments.size(); ++i)
      if (member(a, T.segments[i].tree)) {
        ++hits;
        where = i;
      }
    if (hits != 1) {
      rep.membership_failures.push_back(point_string(a, R) + " lies in " + std::to_string(hits) + " segments");
      continue;
    }
    if (!check_segment(T.segments[where], F, a, R))
      rep.basis_failures.push_back(point_string(a, R) + " segment " + std::to_string(where + 1) +
                                   " does not specialize to the reduced basis");
  }
  return rep;
}

}  // namespace mccgs
