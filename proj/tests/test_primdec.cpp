#include <random>

#include <gtest/gtest.h>

#include "mccgs/primdec.hpp"

using namespace mccgs;

namespace {

RingPtr abcd() { return make_ring({"a", "b", "c", "d"}, OrderKind::Lex); }

Poly P(const char* s, const RingPtr& R) { return parse_poly(s, R); }

std::vector<std::string> factor_strings(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& [q, m] : f.factors) out.push_back(q.to_string() + "^" + std::to_string(m));
  std::sort(out.begin(), out.end());
  return out;
}

Poly random_poly(std::mt19937& rng, const RingPtr& ring, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, maxdeg);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int budget = deg(rng);
    for (std::size_t v = 0; v < ring->nvars() && budget > 0; ++v) {
      int e = std::uniform_int_distribution<int>(0, budget)(rng);
      m.set(v, e);
      budget -= e;
    }
    ts.push_back({m, Rational(coef(rng))});
  }
  return Poly(ring, std::move(ts));
}

// Independent irreducibility witness: degree one and primitive in some variable.
bool degree_one_primitive(const Poly& p) {
  for (auto v : p.variables())
    if (p.degree(v) == 1 && content_in(p, v).is_constant()) return true;
  return false;
}

void check_decomposition(const Ideal& I, const PrimeList& L) {
  // every generator of I lies in every component
  for (const auto& Pi : L.components)
    for (const auto& g : I.gb()) EXPECT_TRUE(Pi.contains(g)) << Pi.to_string();
  // the intersection lies in the radical of I
  if (L.components.empty()) return;
  Ideal X = L.components[0];
  for (std::size_t i = 1; i < L.components.size(); ++i) X = intersect(X, L.components[i]);
  for (const auto& g : X.gb()) EXPECT_TRUE(radical_member(g, I)) << g;
  // pairwise incomparable
  for (std::size_t i = 0; i < L.components.size(); ++i)
    for (std::size_t j = 0; j < L.components.size(); ++j)
      if (i != j) EXPECT_FALSE(L.components[i].contains(L.components[j]));
}

// f*g + p in P with random f, g must put f or g in P.
void spot_check_prime(const Ideal& Pr, std::mt19937& rng, int samples) {
  const auto& R = Pr.ring();
  std::vector<Poly> inside;
  for (const auto& g : Pr.gb()) inside.push_back(g);
  for (int s = 0; s < samples; ++s) {
    Poly f = random_poly(rng, R, 2, 2), g = random_poly(rng, R, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    // plant: f := f + (element of P) so that f*g is interesting
    if (!inside.empty()) f += inside[static_cast<std::size_t>(s) % inside.size()];
    Poly fg = f * g;
    if (Pr.contains(fg)) EXPECT_TRUE(Pr.contains(f) || Pr.contains(g));
    else EXPECT_FALSE(Pr.contains(f) || Pr.contains(g));
  }
}

}  // namespace

TEST(Squarefree, Examples) {
  auto R = abcd();
  auto s = squarefree(P("a^2*b", R));
  EXPECT_EQ(factor_strings(s), (std::vector<std::string>{"a^2", "b^1"}));
  EXPECT_EQ(factor_strings(squarefree(P("b - c^2", R))), (std::vector<std::string>{"b - c^2^1"}));
  auto t = squarefree(P("(b+1)^2*(b-1)", R));
  EXPECT_EQ(factor_strings(t), (std::vector<std::string>{"b + 1^2", "b - 1^1"}));
  EXPECT_EQ(t.expand(R), P("(b+1)^2*(b-1)", R));
}

TEST(Factor, Examples) {
  auto R = abcd();
  EXPECT_EQ(factor_strings(factor(P("b*c*d", R))), (std::vector<std::string>{"b^1", "c^1", "d^1"}));
  auto f = factor(P("b*(b - c^2)", R));
  EXPECT_EQ(factor_strings(f), (std::vector<std::string>{"b - c^2^1", "b^1"}));
  EXPECT_TRUE(degree_one_primitive(P("b - c^2", R)));
  auto five = factor(P("5", R));
  EXPECT_EQ(five.unit, 5);
  EXPECT_TRUE(five.factors.empty());
}

TEST(Factor, Univariate) {
  auto R = make_ring({"t"}, OrderKind::Lex);
  auto f = factor(P("t^4 - 1", R));
  EXPECT_EQ(factor_strings(f), (std::vector<std::string>{"t + 1^1", "t - 1^1", "t^2 + 1^1"}));
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime
  auto g = factor(P("t^4 - 10*t^2 + 1", R));
  EXPECT_EQ(g.factors.size(), 1u);
  EXPECT_TRUE(g.certified);
  auto h = factor(P("6*t^6 - 5*t^5 - 20*t^4 + 10*t^3 + 14*t^2 - 5*t - 6", R));
  EXPECT_EQ(h.expand(R), P("6*t^6 - 5*t^5 - 20*t^4 + 10*t^3 + 14*t^2 - 5*t - 6", R));
}

TEST(Factor, MultivariateProducts) {
  auto R = abcd();
  EXPECT_EQ(factor_strings(factor(P("a^2 + 2*a*b + b^2 - c^2", R))),
            (std::vector<std::string>{"a + b + c^1", "a + b - c^1"}));
  EXPECT_EQ(factor(P("a^2 + b^2", R)).factors.size(), 1u);
  EXPECT_EQ(factor(P("(a - c)^2 + (b - d)^2", R)).factors.size(), 1u);
  EXPECT_EQ(factor_strings(factor(P("(a*b - c*d)*(a^2 + c^2)*(a^2 + c^2)", R))),
            (std::vector<std::string>{"a*b - c*d^1", "a^2 + c^2^2"}));
}

TEST(Factor, RandomProductsReconstruct) {
  auto R = make_ring({"a", "b", "c"}, OrderKind::Grevlex);
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    Poly f = random_poly(rng, R, 3, 2), g = random_poly(rng, R, 3, 2);
    if (f.is_zero() || g.is_zero()) continue;
    Poly p = f * g * f;
    auto F = factor(p);
    EXPECT_EQ(F.expand(R), p);
    // every factor of f must show up
    auto Ff = factor(f);
    for (const auto& [q, m] : Ff.factors) {
      bool present = false;
      for (const auto& [r, k] : F.factors) present = present || (r == q && k >= 2 * m);
      EXPECT_TRUE(present) << q << " in " << p;
    }
  }
}

TEST(MinimalPrimes, Examples) {
  auto R = make_ring({"a", "b", "c"}, OrderKind::Lex);
  auto L = minimal_primes(Ideal(R, {P("a*b", R)}));
  ASSERT_EQ(L.components.size(), 2u);
  EXPECT_EQ(L.components[0], Ideal(R, {P("a", R)}));
  EXPECT_EQ(L.components[1], Ideal(R, {P("b", R)}));
  auto M = minimal_primes(Ideal(R, {P("a", R), P("b*c", R)}));
  ASSERT_EQ(M.components.size(), 2u);
  EXPECT_EQ(M.components[0], Ideal(R, {P("a", R), P("b", R)}));
  EXPECT_EQ(M.components[1], Ideal(R, {P("a", R), P("c", R)}));

  auto S = make_ring({"b", "c", "d"}, OrderKind::Lex);
  Ideal I(S, {P("b - c^2", S), P("b*d", S)});
  auto N = minimal_primes(I);
  ASSERT_EQ(N.components.size(), 2u);
  EXPECT_EQ(N.components[0], Ideal(S, {P("b", S), P("c", S)}));
  EXPECT_EQ(N.components[1], Ideal(S, {P("b - c^2", S), P("d", S)}));
  check_decomposition(I, N);
  EXPECT_TRUE(minimal_primes(Ideal::unit(S)).components.empty());
}

TEST(MinimalPrimes, HiddenSplitNeedsCertification) {
  // every generator irreducible over Q, yet the ideal is not prime
  auto R = make_ring({"a", "b", "c", "d"}, OrderKind::Lex);
  Ideal I(R, {P("a^2 + b^2", R), P("c^2 + d^2", R)});
  auto L = minimal_primes(I);
  EXPECT_EQ(L.components.size(), 2u);
  check_decomposition(I, L);
  std::mt19937 rng(8);
  for (const auto& c : L.components) spot_check_prime(c, rng, 50);
  Ideal J(R, {P("a^2 - 2", R), P("b^2 - 2", R)});
  auto K = minimal_primes(J);
  EXPECT_EQ(K.components.size(), 2u);
  check_decomposition(J, K);
}

TEST(MinimalPrimes, RandomInvariants) {
  auto R = make_ring({"a", "b", "c"}, OrderKind::Lex);
  std::mt19937 rng(29);
  for (int i = 0; i < 12; ++i) {
    Poly f = random_poly(rng, R, 2, 2), g = random_poly(rng, R, 2, 2), h = random_poly(rng, R, 2, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Ideal I(R, {f * g, g * h});
    if (I.is_unit()) continue;
    auto L = minimal_primes(I);
    check_decomposition(I, L);
    for (const auto& c : L.components) spot_check_prime(c, rng, 50);
  }
}

TEST(Irredundant, Examples) {
  auto R = make_ring({"a", "b"}, OrderKind::Lex);
  Ideal a(R, {P("a", R)}), ab(R, {P("a", R), P("b", R)}), b(R, {P("b", R)}),
      ba(R, {P("b", R), P("a", R)});
  EXPECT_EQ(irredundant({a, ab}).size(), 1u);
  EXPECT_EQ(irredundant({a, ab})[0], a);
  EXPECT_EQ(irredundant({a, b}).size(), 2u);
  EXPECT_EQ(irredundant({ab, ba}).size(), 1u);
}
