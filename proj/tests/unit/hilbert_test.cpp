#include <gtest/gtest.h>

#include "brute.hpp"
#include "vnum/error.hpp"
#include "vnum/hilbert.hpp"
#include "vnum/random_corpus.hpp"
#include "vnum/text.hpp"

namespace vnum {
namespace {

TEST(Staircase, RectangularBox) {
  const auto r = RingSpec::standard({"x", "y"});
  const auto rep = staircase(parseIdeal(r, "(x^2, y^3)"));
  EXPECT_EQ(rep.standard_count, 6u);
  EXPECT_EQ(rep.end, ExtDegree(3));
  const std::map<std::int64_t, std::uint64_t> expected{{0, 1}, {1, 2}, {2, 2}, {3, 1}};
  EXPECT_EQ(rep.hilbert, expected);
  EXPECT_EQ(hilbertCsv(rep), "degree,count\n0,1\n1,2\n2,2\n3,1\n");
  EXPECT_EQ(regularityFiniteLength(parseIdeal(r, "(x^2, y^3)")), ExtDegree(3));
}

TEST(Staircase, FiniteLengthDetection) {
  const auto r = RingSpec::standard({"x", "y", "z"});
  EXPECT_TRUE(isFiniteLength(parseIdeal(r, "(x^2, y, z^4, x*y*z)")));
  EXPECT_FALSE(isFiniteLength(parseIdeal(r, "(x^2, y*z)")));
  EXPECT_FALSE(isFiniteLength(MonomialIdeal::zero(r)));
  EXPECT_THROW(staircase(parseIdeal(r, "(x^2, y*z)")), Error);
  EXPECT_THROW(regularityFiniteLength(parseIdeal(r, "(x)")), Error);
}

TEST(Staircase, ZeroModuleIsRejected) {
  const auto r = RingSpec::standard({"x"});
  try {
    staircase(MonomialIdeal::unit(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyModule);
  }
}

class HilbertProperty : public ::testing::TestWithParam<std::uint64_t> {};

MonomialIdeal withPurePowers(RandomCorpus& rng, const RingPtr& r, std::uint32_t mask) {
  std::vector<Monomial> gens = rng.idealIn(r, mask, 3, 4).gens();
  for (std::size_t i = 0; i < r->dim(); ++i) {
    if ((mask >> i) & 1u) gens.push_back(Monomial::variable(r->dim(), i, rng.uniform(1, 5)));
  }
  return MonomialIdeal::minimalize(r, gens);
}

TEST_P(HilbertProperty, CountsMatchBoxEnumeration) {
  RandomCorpus rng(GetParam());
  const auto r = rng.ring(static_cast<std::size_t>(rng.uniform(1, 3)), 2);
  const std::uint32_t all = (1u << r->dim()) - 1;
  const auto B = withPurePowers(rng, r, all);
  const auto rep = staircase(B);
  std::map<std::int64_t, std::uint64_t> expected;
  std::int64_t end = -1;
  for (const auto& m : testing::boxMonomials(r->dim(), 5)) {
    if (testing::member(B, m)) continue;
    ++expected[degree(*r, m)];
    end = std::max(end, degree(*r, m));
  }
  EXPECT_EQ(rep.hilbert, expected) << toString(B);
  EXPECT_EQ(rep.end, end < 0 ? ExtDegree::infinity() : ExtDegree(end));
  EXPECT_EQ(rep.standard.size(), rep.standard_count);
}

TEST_P(HilbertProperty, MultiplicativeOverDisjointVariables) {
  RandomCorpus rng(GetParam() + 100);
  const std::size_t d = static_cast<std::size_t>(rng.uniform(2, 4));
  const auto r = rng.ring(d, 2);
  const std::uint32_t left = static_cast<std::uint32_t>(rng.uniform(1, (1 << (d - 1)) - 1)) | 1u;
  const std::uint32_t right = ((1u << d) - 1) & ~left;
  if (right == 0) GTEST_SKIP();
  const auto B1 = withPurePowers(rng, r, left);
  const auto B2 = withPurePowers(rng, r, right);
  // Series of R/(B1 + B2) is the product of the two factor series.
  auto series = [&](const MonomialIdeal& B, std::uint32_t mask) {
    auto gens = B.gens();
    for (std::size_t i = 0; i < d; ++i) {
      if (!((mask >> i) & 1u)) gens.push_back(Monomial::variable(d, i));
    }
    return staircase(MonomialIdeal::minimalize(r, gens)).hilbert;
  };
  const auto h1 = series(B1, left), h2 = series(B2, right);
  std::map<std::int64_t, std::uint64_t> conv;
  for (const auto& [a, ca] : h1) {
    for (const auto& [b, cb] : h2) conv[a + b] += ca * cb;
  }
  const auto whole = staircase(sum(B1, B2));
  EXPECT_EQ(whole.hilbert, conv);
  EXPECT_EQ(whole.end, ExtDegree(series(B1, left).rbegin()->first + h2.rbegin()->first));
}

INSTANTIATE_TEST_SUITE_P(Seeds, HilbertProperty, ::testing::Range<std::uint64_t>(1, 31));

}  // namespace
}  // namespace vnum
