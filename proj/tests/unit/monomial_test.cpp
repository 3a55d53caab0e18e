#include <gtest/gtest.h>

#include <functional>

#include "vnum/error.hpp"
#include "vnum/ext_degree.hpp"
#include "vnum/monomial.hpp"
#include "vnum/random_corpus.hpp"
#include "vnum/text.hpp"

namespace vnum {
namespace {

TEST(RingSpec, ValidatesShape) {
  EXPECT_THROW(RingSpec::make({}, {}), Error);
  EXPECT_THROW(RingSpec::make({"x", "y"}, {1}), Error);
  EXPECT_THROW(RingSpec::make({"x", "x"}, {1, 1}), Error);
  EXPECT_THROW(RingSpec::make({"x"}, {0}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("x" + std::to_string(i));
  try {
    RingSpec::standard(many);
    FAIL() << "17 variables accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyVariables);
  }
  const auto r = RingSpec::make({"x", "y"}, {2, 3});
  EXPECT_EQ(r->dim(), 2u);
  EXPECT_EQ(r->indexOf("y"), 1u);
  EXPECT_FALSE(r->indexOf("z"));
}

TEST(Monomial, DegreeUsesWeights) {
  const auto r = RingSpec::make({"x", "y", "z"}, {1, 2, 3});
  EXPECT_EQ(degree(*r, Monomial{2, 1, 1}), 2 + 2 + 3);
  EXPECT_EQ(degree(*r, Monomial::unit(3)), 0);
  EXPECT_THROW(degree(*r, Monomial{1, 1}), Error);
}

TEST(Monomial, Arithmetic) {
  const Monomial a{3, 0, 2}, b{1, 4, 2};
  EXPECT_EQ(a * b, (Monomial{4, 4, 4}));
  EXPECT_EQ(lcm(a, b), (Monomial{3, 4, 2}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 0, 2}));
  EXPECT_EQ(colonQuotient(a, b), (Monomial{2, 0, 0}));
  EXPECT_EQ(divide(a * b, b), a);
  EXPECT_THROW(divide(a, b), Error);
  EXPECT_EQ(pow(a, 3), (Monomial{9, 0, 6}));
  EXPECT_TRUE((Monomial{1, 0, 2}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a.support(), 0b101u);
  EXPECT_THROW((Monomial{1, -1}), Error);
}

TEST(Monomial, OverflowIsDetected) {
  const Monomial big{std::int64_t{1} << 62};
  EXPECT_THROW(big * big, Error);
  EXPECT_THROW(pow(big, 4), Error);
}

TEST(Monomial, CanonicalOrderWithinDegree) {
  const auto r = RingSpec::standard({"x", "y"});
  const auto deg2 = monomialsOfDegree(*r, 2);
  ASSERT_EQ(deg2.size(), 3u);
  EXPECT_EQ(deg2[0], (Monomial{2, 0}));
  EXPECT_EQ(deg2[1], (Monomial{1, 1}));
  EXPECT_EQ(deg2[2], (Monomial{0, 2}));
  EXPECT_TRUE(canonicalLess(*r, Monomial{0, 1}, Monomial{2, 0}));
  EXPECT_TRUE(canonicalLess(*r, Monomial{2, 0}, Monomial{1, 1}));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t v = 1;
  for (std::int64_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

TEST(Monomial, DegreeEnumerationCountsMatchStarsAndBars) {
  const auto r = RingSpec::standard({"a", "b", "c", "d"});
  for (std::int64_t d = 0; d <= 8; ++d) {
    EXPECT_EQ(static_cast<std::int64_t>(monomialsOfDegree(*r, d).size()), binomial(d + 3, 3)) << d;
  }
}

TEST(Monomial, WeightedEnumerationMatchesFilteredBox) {
  RandomCorpus rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = rng.ring(static_cast<std::size_t>(rng.uniform(1, 3)), 3);
    for (std::int64_t d = 0; d <= 7; ++d) {
      const auto got = monomialsOfDegree(*r, d);
      std::size_t expected = 0;
      Monomial cur(r->dim());
      // Exponent i is at most d / w_i.
      std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == r->dim()) {
          expected += degree(*r, cur) == d;
          return;
        }
        for (std::int64_t e = 0; e * r->weight(i) <= d; ++e) {
          cur[i] = e;
          walk(i + 1);
        }
        cur[i] = 0;
      };
      walk(0);
      ASSERT_EQ(got.size(), expected);
      for (std::size_t k = 0; k < got.size(); ++k) {
        EXPECT_EQ(degree(*r, got[k]), d);
        if (k) EXPECT_TRUE(canonicalLess(*r, got[k - 1], got[k]));
      }
    }
  }
}

TEST(Monomial, TextRoundTrip) {
  const auto r = RingSpec::standard({"x", "y", "z"});
  const Monomial m{2, 1, 3};
  EXPECT_EQ(toString(*r, m), "x^2*y*z^3");
  EXPECT_EQ(parseMonomial(*r, "x^2*y*z^3"), m);
  EXPECT_EQ(parseMonomial(*r, " x ^2 * z^3*y "), m);
  EXPECT_EQ(toString(*r, Monomial::unit(3)), "1");
  EXPECT_EQ(parseMonomial(*r, "1"), Monomial::unit(3));
  EXPECT_THROW(parseMonomial(*r, "x^^2"), Error);
  EXPECT_THROW(parseMonomial(*r, "q"), Error);
  EXPECT_THROW(parseMonomial(*r, "2"), Error);
}

TEST(ExtDegree, InfinityOrdersLast) {
  const ExtDegree inf;
  EXPECT_TRUE(inf.isInfinite());
  EXPECT_LT(ExtDegree(5), inf);
  EXPECT_EQ(inf, ExtDegree::infinity());
  EXPECT_NE(ExtDegree(0), inf);
  EXPECT_EQ(inf.toString(), "inf");
  EXPECT_EQ(ExtDegree(-3).toString(), "-3");
  EXPECT_THROW(inf.value(), Error);
  EXPECT_EQ(std::min(ExtDegree(7), inf), ExtDegree(7));
}

}  // namespace
}  // namespace vnum
