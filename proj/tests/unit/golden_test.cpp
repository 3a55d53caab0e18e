#include <gtest/gtest.h>

#include <set>

#include "vnum/golden.hpp"

namespace vnum {
namespace {

TEST(Golden, SuitesAreNamedUniquely) {
  std::set<std::string> names;
  for (const auto& s : goldenSuites()) {
    EXPECT_FALSE(s.description.empty());
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
  }
  EXPECT_EQ(names.size(), 4u);
}

TEST(Golden, EveryClaimHolds) {
  GoldenOptions opt;
  opt.jobs = 4;
  for (const auto& rep : runGoldenSuites(opt)) {
    EXPECT_FALSE(rep.claims.empty()) << rep.suite;
    for (const auto& c : rep.claims) EXPECT_TRUE(c.pass) << rep.suite << ": " << c.claim << " (" << c.detail << ")";
    EXPECT_TRUE(rep.passed());
  }
}

TEST(Golden, FitsAreExactAndInsideAlphabet) {
  std::size_t fits = 0;
  for (const auto& rep : runGoldenSuites()) {
    for (const auto& f : rep.fits) {
      ++fits;
      EXPECT_EQ(f.model.verdict, FitVerdict::Exact) << f.label;
      for (const auto& plane : f.model.planes) {
        for (std::size_t i = 0; i < plane.slopes.size(); ++i) {
          bool found = false;
          for (const auto& g : f.pattern.ideals[i].gens()) found |= degree(*f.pattern.ring, g) == plane.slopes[i];
          EXPECT_TRUE(found) << f.label << ": " << toString(plane);
        }
      }
    }
  }
  EXPECT_GT(fits, 0u);
}

}  // namespace
}  // namespace vnum
