#include <gtest/gtest.h>

#include "brute.hpp"
#include "vnum/ass.hpp"
#include "vnum/error.hpp"
#include "vnum/pattern.hpp"
#include "vnum/random_corpus.hpp"
#include "vnum/text.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {
namespace {

TEST(VNumber, SmallCyclic) {
  const auto r = RingSpec::standard({"x", "y"});
  const auto s = Subquotient::cyclic(parseIdeal(r, "(x^2, x*y)"));
  const auto px = MonomialPrime::fromIndices(r, {0});
  const auto m = MonomialPrime::maximal(r);
  const auto vx = localVNumber(s, px);
  EXPECT_EQ(vx.value, ExtDegree(1));
  ASSERT_TRUE(vx.witness);
  EXPECT_EQ(*vx.witness, (Monomial{0, 1}));
  EXPECT_EQ(localVNumber(s, m).value, ExtDegree(1));
  const auto g = globalVNumber(s);
  EXPECT_TRUE(g.global);
  EXPECT_EQ(g.value, ExtDegree(1));
  EXPECT_THROW(localVNumber(s, MonomialPrime::fromIndices(r, {1})), Error);
  EXPECT_EQ(localVNumberOrInf(s, MonomialPrime::fromIndices(r, {1})), ExtDegree::infinity());
}

TEST(VNumber, PowersOfMaximalIdeal) {
  const auto r = RingSpec::standard({"x", "y", "z"});
  auto m = parseIdeal(r, "(x, y, z)");
  for (std::int64_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(globalVNumber(Subquotient::cyclic(power(m, n))).value, ExtDegree(n - 1));
  }
}

TEST(VNumber, WeightsScaleDegrees) {
  const auto r = RingSpec::make({"x", "y"}, {2, 3});
  const auto s = Subquotient::cyclic(parseIdeal(r, "(x^2, y^2)"));
  // Socle witness x*y has weighted degree 5.
  EXPECT_EQ(globalVNumber(s).value, ExtDegree(5));
}

TEST(VNumber, LocalAtPrimeInThreePrimeModule) {
  const auto r = RingSpec::standard({"x", "y", "z"});
  const auto family = ModulePattern::make(PatternKind::QuotientByPower, parseIdeal(r, "(x*y)"),
                                          {parseIdeal(r, "(x, z^2)"), parseIdeal(r, "(y, z^3)")},
                                          MonomialIdeal::unit(r));
  const GridPoint n{2, 3};
  const auto s = instantiate(family, n);
  const auto xz = MonomialPrime::fromIndices(r, {0, 2});
  const auto res = localVNumber(s, xz);
  EXPECT_EQ(res.value, ExtDegree(6));
  const auto brute = bruteForceVNumber(s, xz, 30);
  ASSERT_TRUE(brute.found());
  EXPECT_EQ(brute.degree, 6);
}

TEST(VNumber, ZeroModuleIsInfinite) {
  const auto r = RingSpec::standard({"x"});
  const auto I = parseIdeal(r, "(x)");
  EXPECT_EQ(globalVNumber(Subquotient(I, I)).value, ExtDegree::infinity());
}

TEST(VNumber, JsonShape) {
  const auto r = RingSpec::standard({"x", "y"});
  const auto s = Subquotient::cyclic(parseIdeal(r, "(x^2, x*y)"));
  EXPECT_EQ(toJson(localVNumber(s, MonomialPrime::fromIndices(r, {0}))),
            R"({"prime":["x"],"value":1,"witness":"y"})");
}

TEST(Indeg, Basics) {
  const auto r = RingSpec::standard({"x", "y"});
  const Subquotient s(parseIdeal(r, "(x^2, y)"), parseIdeal(r, "(x^3, y^2, x*y)"));
  const auto res = indegQuotient(s);
  EXPECT_EQ(res.value, ExtDegree(1));
  EXPECT_EQ(*res.witness, (Monomial{0, 1}));
  const auto I = parseIdeal(r, "(x)");
  EXPECT_EQ(indegQuotient(Subquotient(I, I)).value, ExtDegree::infinity());
}

std::optional<MonomialPrime> bruteAnnihilator(const MonomialIdeal& B, const Monomial& mu) {
  // (B : mu) is a variable prime iff mu is not in B, x_i mu is in B for the
  // variables of the prime, and no pure power of the other variables helps.
  if (testing::member(B, mu)) return std::nullopt;
  const std::size_t d = mu.size();
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < d; ++i) {
    auto t = mu;
    t[i] += 1;
    if (testing::member(B, t)) mask |= 1u << i;
  }
  // Every generator of (B : mu) must be one of those variables.
  for (const auto& g : B.gens()) {
    Monomial q(d);
    bool isVar = true;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < d; ++i) {
      q[i] = std::max<std::int64_t>(0, g[i] - mu[i]);
      total += q[i];
    }
    if (total == 1) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (q[i] > 0 && ((mask >> i) & 1u)) isVar = false;
    }
    if (isVar) return std::nullopt;
  }
  return MonomialPrime(B.ring(), mask);
}

class VNumberProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(VNumberProperty, AnnihilatorAgreesWithIndependentCheck) {
  RandomCorpus rng(GetParam());
  const auto r = rng.ring(static_cast<std::size_t>(rng.uniform(2, 3)));
  const auto B = rng.ideal(r, 4, 3);
  for (const auto& mu : testing::boxMonomials(r->dim(), 3)) {
    const auto fast = annihilatorPrime(B, mu);
    const auto slow = bruteAnnihilator(B, mu);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << toString(B) << " at " << toString(*r, mu);
    if (fast) EXPECT_EQ(fast->mask(), slow->mask());
  }
}

TEST_P(VNumberProperty, LocalMatchesEnumerationAndWitnessIsValid) {
  RandomCorpus rng(GetParam() + 500);
  const auto r = rng.ring(static_cast<std::size_t>(rng.uniform(2, 3)), 2);
  const auto A = rng.coin() ? MonomialIdeal::unit(r) : rng.ideal(r, 2, 2);
  const auto B = testing::properSubideal(rng, A, 4, 3);
  const Subquotient s(A, B);
  ExtDegree best;
  const auto ass = assSubquotient(s);
  for (const auto& p : ass.primes()) {
    const auto res = localVNumber(s, p);
    ASSERT_TRUE(res.value.isFinite());
    ASSERT_TRUE(res.witness);
    EXPECT_TRUE(A.contains(*res.witness));
    EXPECT_EQ(degree(*r, *res.witness), res.value.value());
    EXPECT_EQ(annihilatorPrime(B, *res.witness), p);
    const auto brute = bruteForceVNumber(s, p, res.value.value() + 1);
    ASSERT_TRUE(brute.found()) << toString(s);
    EXPECT_EQ(brute.degree, res.value.value()) << toString(s) << " at " << toString(p);
    best = std::min(best, res.value);
  }
  EXPECT_EQ(globalVNumber(s).value, best);
}

TEST_P(VNumberProperty, IndegMatchesEnumeration) {
  RandomCorpus rng(GetParam() + 900);
  const auto r = rng.ring(static_cast<std::size_t>(rng.uniform(2, 3)), 2);
  const auto A = rng.ideal(r, 3, 3);
  const auto B = intersect(A, rng.ideal(r, 3, 3));
  ExtDegree best;
  for (const auto& m : testing::boxMonomials(r->dim(), 4)) {
    if (testing::member(A, m) && !testing::member(B, m)) best = std::min(best, ExtDegree(degree(*r, m)));
  }
  EXPECT_EQ(indegQuotient(Subquotient(A, B)).value, best);
}

INSTANTIATE_TEST_SUITE_P(Seeds, VNumberProperty, ::testing::Range<std::uint64_t>(1, 41));

}  // namespace
}  // namespace vnum
