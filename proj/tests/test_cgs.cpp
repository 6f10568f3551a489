#include <random>

#include <gtest/gtest.h>

#include "mccgs/cgs.hpp"
#include "mccgs/sampling.hpp"
#include "support/problems.hpp"

using namespace mccgs;
using namespace testing_support;

namespace {

WorkingSpec spec(const ParametricRings& R, std::vector<std::string> n, std::vector<std::string> w) {
  auto pl = minimal_primes(Ideal(R.params, polys(R.params, n)));
  return WorkingSpec::make(pl.components, polys(R.params, w), R.params);
}

std::size_t covering(const BuildResult& r, const std::vector<Rational>& a) {
  std::size_t k = 0;
  for (const auto& L : r.leaves) k += L.spec.contains(a);
  return k;
}

// Every leaf checked against a direct basis at points of its own segment,
// and every sampled point covered exactly once.
void check_leaves(const BuildResult& r, std::span<const Poly> F, const ParametricRings& R, unsigned seed,
                  int per_prime, int random_points, bool require_points = true) {
  PointSampler ps(seed, 4);
  for (const auto& L : r.leaves) {
    auto pts = points_in(L.spec, ps, per_prime);
    // Zero-dimensional segments may have no rational point.
    if (require_points) EXPECT_FALSE(pts.empty()) << L.spec.red().to_string();
    for (const auto& a : pts) {
      EXPECT_EQ(covering(r, a), 1u);
      EXPECT_TRUE(check_against_oracle(L, F, a, R)) << L.spec.red().to_string();
    }
  }
  for (int i = 0; i < random_points; ++i) EXPECT_EQ(covering(r, ps.random_point(R.space.nparams())), 1u);
}

}  // namespace

TEST(Nullity, ReduceCoeffs) {
  auto R = conic_rings();
  auto v = reduce_coeffs(parse_poly("b*x + y", R.full), spec(R, {"b"}, {}), R);
  EXPECT_EQ(v.reduced, parse_poly("y", R.full));
  EXPECT_FALSE(v.branch_coefficient);

  v = reduce_coeffs(parse_poly("2*c*y + d", R.full), spec(R, {"b"}, {"c"}), R);
  EXPECT_EQ(v.reduced, parse_poly("2*c*y + d", R.full));
  EXPECT_FALSE(v.branch_coefficient);

  auto R2 = conic_rings();
  v = reduce_coeffs(parse_poly("d*x + 1", R2.full), spec(R2, {}, {}), R2);
  ASSERT_TRUE(v.branch_coefficient);
  EXPECT_EQ(*v.branch_coefficient, parse_poly("d", R2.params));
}

TEST(Nullity, SemanticNonNull) {
  auto R = conic_rings();
  // b - c^2 vanishes nowhere on V(b) minus V(c).
  EXPECT_EQ(nullity(parse_poly("b - c^2", R.params), spec(R, {"b"}, {"c"})), Nullity::NonNull);
  EXPECT_EQ(nullity(parse_poly("b - c^2", R.params), spec(R, {"b"}, {})), Nullity::Undecided);
  EXPECT_EQ(nullity(parse_poly("b*c", R.params), spec(R, {"b"}, {})), Nullity::Zero);
}

TEST(Branch, Children) {
  auto R = conic_rings();
  auto [nn, nl] = branch(spec(R, {}, {}), parse_poly("d", R.params));
  ASSERT_TRUE(nn && nl);
  EXPECT_EQ(nn->red().to_string(), "(<0>, {d})");
  EXPECT_EQ(nl->red().to_string(), "(<d>, {})");

  auto [nn2, nl2] = branch(spec(R, {}, {"d"}), parse_poly("b", R.params));
  EXPECT_EQ(nn2->red().to_string(), "(<0>, {b, d})");
  EXPECT_EQ(nl2->red().to_string(), "(<b>, {d})");

  auto [nn3, nl3] = branch(spec(R, {"d"}, {}), parse_poly("b - c^2", R.params));
  EXPECT_EQ(nn3->red().to_string(), "(<d>, {b - c^2})");
  EXPECT_EQ(nl3->red().to_string(), "(<b - c^2, d>, {})");

  // The null child of a W-element is dead.
  auto [nn4, nl4] = branch(spec(R, {}, {"d"}), parse_poly("d*b", R.params));
  EXPECT_TRUE(nn4);
  ASSERT_TRUE(nl4);
  EXPECT_EQ(nl4->red().to_string(), "(<b>, {d})");
}

TEST(Buildtree, ConicLeaves) {
  auto R = conic_rings();
  auto F = conic_system(R);
  auto r = buildtree(F, R);
  EXPECT_TRUE(r.certified);
  std::size_t unit = 0, yx = 0, x = 0;
  for (const auto& L : r.leaves) {
    auto l = lpp_set(L.B, R);
    if (L.B.size() == 1 && L.B[0].is_one()) ++unit;
    else if (l.size() == 2) ++yx;
    else if (l.size() == 1) ++x;
  }
  EXPECT_GE(unit, 1u);
  EXPECT_GE(yx, 1u);
  EXPECT_GE(x, 1u);
  EXPECT_EQ(unit + yx + x, r.leaves.size());
  check_leaves(r, F, R, 7, 6, 200);
}

TEST(Buildtree, KnownSpecializations) {
  auto R = conic_rings();
  auto F = conic_system(R);
  auto r = buildtree(F, R);
  auto at = [&](std::vector<Rational> a) -> const SegmentLeaf& {
    for (const auto& L : r.leaves)
      if (L.spec.contains(a)) return L;
    throw std::runtime_error("uncovered");
  };
  std::vector<Rational> p1{1, 0, 1}, p2{0, 1, 1}, p3{1, 1, 0};
  EXPECT_EQ(specialize_basis(at(p1).B, p1, R), polys(R.vars, {"1"}));
  EXPECT_EQ(specialize_basis(at(p2).B, p2, R), polys(R.vars, {"x", "2*y + 1"}));
  EXPECT_EQ(specialize_basis(at(p3).B, p3, R), polys(R.vars, {"x + y"}));
  for (auto* p : {&p1, &p2, &p3}) EXPECT_TRUE(check_against_oracle(at(*p), F, *p, R));
}

TEST(Buildtree, TrivialInputs) {
  auto R = conic_rings();
  auto one = polys(R.full, {"1"});
  auto r = buildtree(one, R);
  ASSERT_EQ(r.leaves.size(), 1u);
  EXPECT_TRUE(r.leaves[0].B[0].is_one());
  EXPECT_EQ(r.leaves[0].spec.red().to_string(), "(<0>, {})");

  auto F = polys(R.full, {"d*x - 1"});
  auto null0 = polys(R.params, {"d"});
  r = buildtree(F, R, null0);
  ASSERT_EQ(r.leaves.size(), 1u);
  EXPECT_TRUE(r.leaves[0].B[0].is_one());
  EXPECT_EQ(r.leaves[0].spec.red().to_string(), "(<d>, {})");

  auto none = buildtree(F, R, polys(R.params, {"1"}));
  EXPECT_TRUE(none.leaves.empty());
  auto dead = buildtree(F, R, null0, polys(R.params, {"d*b"}));
  EXPECT_TRUE(dead.leaves.empty());
}

TEST(Buildtree, LeafBasesAreReduced) {
  auto R = conic_rings();
  auto r = buildtree(conic_system(R), R);
  for (const auto& L : r.leaves) {
    for (std::size_t i = 0; i < L.B.size(); ++i) {
      EXPECT_TRUE(content_wrt_x(L.B[i], R).is_one());
      EXPECT_EQ(nullity(leading(L.B[i], R).coeff, L.spec), Nullity::NonNull);
      for (std::size_t j = 0; j < L.B.size(); ++j) {
        if (i == j) continue;
        Monomial lj = leading(L.B[j], R).lpp;
        for (const auto& t : L.B[i].terms()) {
          Monomial x;
          for (std::size_t k = 0; k < R.space.nvars(); ++k) x.set(k, t.mono[k]);
          EXPECT_FALSE(lj.divides(x)) << L.B[i];
        }
      }
    }
  }
}

TEST(Buildtree, ConstraintsRefineUnconstrained) {
  auto R = conic_rings();
  auto F = conic_system(R);
  auto all = buildtree(F, R);
  auto null0 = polys(R.params, {"d"});
  auto notnull0 = polys(R.params, {"c"});
  auto part = buildtree(F, R, null0, notnull0);
  PointSampler ps(11, 4);
  Ideal D(R.params, null0);
  for (int i = 0; i < 40; ++i) {
    auto a = ps.point_on(D);
    ASSERT_TRUE(a);
    if ((*a)[1] == 0) {
      EXPECT_EQ(covering(part, *a), 0u);
      continue;
    }
    EXPECT_EQ(covering(part, *a), 1u);
    for (const auto& L : part.leaves)
      if (L.spec.contains(*a)) {
        for (const auto& M : all.leaves)
          if (M.spec.contains(*a))
            EXPECT_EQ(specialize_basis(L.B, *a, R), specialize_basis(M.B, *a, R));
      }
  }
  EXPECT_EQ(covering(part, ps.random_point(3)), 0u);
}

TEST(Buildtree, RandomSystemsAgreeWithOracle) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto R = ParametricRings::make({{"x", "y"}, {"a", "b"}}, OrderKind::Grevlex, OrderKind::Lex);
  std::vector<std::string> monos = {"x^2", "x*y", "y^2", "x", "y", "1"};
  std::vector<std::string> pcoef = {"a", "b", "1", "a - b", "a*b"};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Poly> F;
    for (int k = 0; k < 2; ++k) {
      Poly f(R.full);
      for (const auto& m : monos) {
        int c = coeff(rng);
        if (c == 0) continue;
        f += parse_poly(std::to_string(c) + "*(" + pcoef[rng() % pcoef.size()] + ")*" + m, R.full);
      }
      F.push_back(f);
    }
    auto r = buildtree(F, R);
    check_leaves(r, F, R, 100 + trial, 3, 60, false);
  }
}

TEST(SpecializesWell, ConicCases) {
  auto R = conic_rings();
  auto s1 = spec(R, {"b"}, {"c", "d"});
  Poly g = parse_poly("2*c*y + d", R.full);
  EXPECT_TRUE(specializes_well(g, g, s1, R));
  Poly generic = parse_poly("(2*b - 2*c^2)*y - c*d", R.full);
  EXPECT_TRUE(specializes_well(generic, g, s1, R));
  auto s2 = spec(R, {"d", "c"}, {"b"});
  EXPECT_FALSE(specializes_well(g, parse_poly("y", R.full), s2, R));
  EXPECT_TRUE(specializes_well(generic, parse_poly("y", R.full), s2, R));
}
