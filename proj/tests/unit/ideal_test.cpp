#include <gtest/gtest.h>

#include "brute.hpp"
#include "vnum/error.hpp"
#include "vnum/ideal.hpp"
#include "vnum/random_corpus.hpp"
#include "vnum/text.hpp"

namespace vnum {
namespace {

using testing::firstDisagreement;
using testing::member;

class IdealTest : public ::testing::Test {
 protected:
  RingPtr r2 = RingSpec::standard({"x", "y"});
  RingPtr r3 = RingSpec::standard({"x", "y", "z"});
  MonomialIdeal id2(const char* s) { return parseIdeal(r2, s); }
  MonomialIdeal id3(const char* s) { return parseIdeal(r3, s); }
};

TEST_F(IdealTest, MinimalizeDropsMultiples) {
  const auto I = MonomialIdeal::minimalize(r2, {Monomial{3, 0}, Monomial{1, 1}, Monomial{2, 2}, Monomial{0, 3}});
  EXPECT_EQ(toString(I), "(x*y, x^3, y^3)");
  EXPECT_EQ(I.numGens(), 3u);
  EXPECT_TRUE(MonomialIdeal::minimalize(r2, {}).isZero());
  EXPECT_TRUE(MonomialIdeal::minimalize(r2, {Monomial{0, 0}, Monomial{1, 0}}).isUnit());
  EXPECT_EQ(toString(MonomialIdeal::zero(r2)), "(0)");
  EXPECT_EQ(toString(MonomialIdeal::unit(r2)), "(1)");
}

TEST_F(IdealTest, EqualityIsCanonical) {
  EXPECT_EQ(id2("(y^3, x*y, x^3, x^2*y^2)"), id2("(x^3, x*y, y^3)"));
  EXPECT_NE(id2("(x)"), id2("(y)"));
}

TEST_F(IdealTest, Membership) {
  const auto I = id2("(x^3, x*y, y^3)");
  EXPECT_TRUE(I.contains(Monomial{2, 2}));
  EXPECT_FALSE(I.contains(Monomial{0, 2}));
  EXPECT_FALSE(MonomialIdeal::zero(r2).contains(Monomial{0, 0}));
  EXPECT_TRUE(MonomialIdeal::unit(r2).contains(Monomial{0, 0}));
}

TEST_F(IdealTest, SmallOperations) {
  EXPECT_EQ(product(id2("(x)"), id2("(y)")), id2("(x*y)"));
  EXPECT_EQ(intersect(id2("(x^2, y)"), id2("(x, y^2)")), id2("(x^2, x*y, y^2)"));
  EXPECT_EQ(product(id2("(x, y^2)"), id2("(x^2, y)")), id2("(x^3, x*y, y^3)"));
  const std::vector<MonomialIdeal> fam = {id2("(x, y^2)"), id2("(x^2, y)")};
  EXPECT_EQ(multiPower(fam, std::vector<std::int64_t>{1, 1}), id2("(x^3, x*y, y^3)"));
  EXPECT_TRUE(multiPower(fam, std::vector<std::int64_t>{0, 0}).isUnit());
  EXPECT_EQ(multiPower(fam, std::vector<std::int64_t>{2, 1}),
            testing::naiveProduct(testing::naiveProduct(fam[0], fam[0]), fam[1]));
  EXPECT_EQ(colon(id2("(x^3, x*y, y^3)"), Monomial{0, 2}), id2("(x, y)"));
  EXPECT_EQ(colon(id2("(x^3, x*y)"), MonomialIdeal::unit(r2)), id2("(x^3, x*y)"));
  EXPECT_EQ(saturate(id2("(x^2*y)"), Monomial{0, 1}), id2("(x^2)"));
  EXPECT_TRUE(saturate(id2("(x^4, y^5, x*y)"), id2("(x, y)")).isUnit());
  EXPECT_EQ(saturate(id2("(x^2*y, y^3)"), MonomialIdeal::unit(r2)), id2("(x^2*y, y^3)"));
  EXPECT_EQ(radical(id2("(x^3, y^3, x*y)")), id2("(x, y)"));
  EXPECT_TRUE(radical(MonomialIdeal::unit(r2)).isUnit());
  EXPECT_TRUE(isRadical(id3("(x*y, y*z)")));
  EXPECT_FALSE(isRadical(id3("(x^2)")));
}

TEST_F(IdealTest, ColonByZeroIdealIsAnError) {
  try {
    colon(id2("(x)"), MonomialIdeal::zero(r2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ColonByZero);
  }
}

TEST_F(IdealTest, RingMismatchIsAnError) {
  EXPECT_THROW(sum(id2("(x)"), id3("(x)")), Error);
}

TEST_F(IdealTest, RadicalOfProductMatchesSquarefreeMembership) {
  const auto B = product(id3("(x^2, y*z^2)"), id3("(y^2, x*z^2)"));
  const auto rad = radical(B);
  // A squarefree monomial lies in sqrt(B) iff a power of it lies in B.
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    Monomial sq(3), big(3);
    for (std::size_t i = 0; i < 3; ++i) {
      sq[i] = (mask >> i) & 1u;
      big[i] = sq[i] * 8;
    }
    EXPECT_EQ(member(rad, sq), member(B, big)) << mask;
  }
  EXPECT_EQ(rad, id3("(x*y, x*z, y*z)"));
}

// Property suite: every operation against plain membership over a box.
class IdealProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(IdealProperty, OperationsMatchMembership) {
  RandomCorpus rng(GetParam());
  const auto ring = rng.ring(static_cast<std::size_t>(rng.uniform(2, 3)), 2);
  const auto I = rng.ideal(ring, 4, 4);
  const auto J = rng.ideal(ring, 4, 4);
  const auto K = rng.ideal(ring, 3, 3);
  const std::int64_t E = 9;

  EXPECT_FALSE(firstDisagreement(sum(I, J), E, [&](const Monomial& m) { return member(I, m) || member(J, m); }));
  EXPECT_FALSE(firstDisagreement(intersect(I, J), E, [&](const Monomial& m) { return member(I, m) && member(J, m); }));
  EXPECT_EQ(product(I, J), testing::naiveProduct(I, J));
  EXPECT_EQ(power(I, 3), testing::naiveProduct(testing::naiveProduct(I, I), I));

  // (I : J) = {m : m*g in I for every generator g of J}.
  const auto IJ = colon(I, J);
  EXPECT_FALSE(firstDisagreement(IJ, E, [&](const Monomial& m) {
    for (const auto& g : J.gens()) {
      if (!member(I, m * g)) return false;
    }
    return true;
  }));
  // (I : JK) = ((I : J) : K).
  EXPECT_EQ(colon(I, product(J, K)), colon(colon(I, J), K));

  // Saturation equals the stable value of iterated colons.
  auto iter = I;
  auto Jk = J;
  for (int k = 0; k < 40; ++k) {
    const auto next = colon(I, Jk);
    if (next == iter && k > 0) break;
    iter = next;
    Jk = product(Jk, J);
  }
  EXPECT_EQ(saturate(I, J), iter);

  // Radical: m in sqrt(I) iff m^k in I for large k.
  EXPECT_FALSE(firstDisagreement(radical(I), 3, [&](const Monomial& m) { return member(I, pow(m, 16)); }));
  EXPECT_TRUE(I.isSubsetOf(sum(I, J)));
  EXPECT_TRUE(intersect(I, J).isSubsetOf(J));
  EXPECT_TRUE(product(I, J).isSubsetOf(intersect(I, J)));

  // Generators are minimal and canonically sorted.
  const auto IJprod = product(I, J);
  const auto& g = IJprod.gens();
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (a) EXPECT_TRUE(canonicalLess(*ring, g[a - 1], g[a]));
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a != b) EXPECT_FALSE(testing::divides(g[a], g[b]));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, IdealProperty, ::testing::Range<std::uint64_t>(1, 51));

}  // namespace
}  // namespace vnum
