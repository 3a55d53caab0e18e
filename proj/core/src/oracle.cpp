#include "vnum/oracle.hpp"

#include <set>

#include "vnum/ass.hpp"
#include "vnum/grid.hpp"
#include "vnum/random_corpus.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

OracleComparison compareWithOracle(const Subquotient& s, std::int64_t max_degree) {
  OracleComparison out;
  out.module = toString(s);
  const auto& ring = *s.ring();
  Monomial top(ring.dim());
  for (const auto* ideal : {&s.top(), &s.bottom()}) {
    for (const auto& g : ideal->gens()) top = lcm(top, g);
  }
  out.bound = degree(ring, top);
  if (out.bound > max_degree) {
    out.skipped = true;
    return out;
  }
  if (s.isZero()) return out;

  out.fast = assSubquotient(s);
  std::set<std::uint32_t> seen;
  std::vector<MonomialPrime> found;
  for (std::int64_t k = 0; k <= out.bound; ++k) {
    for (const auto& mu : monomialsOfDegree(ring, k)) {
      if (!s.top().contains(mu)) continue;
      if (auto p = annihilatorPrime(s.bottom(), mu); p && seen.insert(p->mask()).second) found.push_back(*p);
    }
  }
  out.enumerated = AssSet(found);
  for (const auto& p : out.enumerated.primes()) {
    if (!out.fast.contains(p)) out.mismatches.push_back("enumeration finds " + toString(p) + " outside Ass");
  }
  for (const auto& p : out.fast.primes()) {
    if (!out.enumerated.contains(p)) {
      out.mismatches.push_back("no witness for " + toString(p) + " up to degree " + std::to_string(out.bound));
      continue;
    }
    const auto fast = localVNumber(s, p, out.fast);
    const auto brute = bruteForceVNumber(s, p, out.bound);
    if (!brute.found() || ExtDegree(brute.degree) != fast.value) {
      out.mismatches.push_back("v at " + toString(p) + ": fast " + fast.value.toString() + ", enumeration " +
                               (brute.found() ? std::to_string(brute.degree) : std::string("none")));
    }
  }
  return out;
}

std::vector<OracleComparison> runOracleCorpus(const OracleCorpusOptions& options) {
  RandomCorpus corpus(options.seed);
  std::vector<MonomialIdeal> ideals;
  for (std::size_t i = 0; i < options.count; ++i) {
    const auto nvars = static_cast<std::size_t>(corpus.uniform(1, static_cast<std::int64_t>(options.max_vars)));
    ideals.push_back(corpus.ideal(corpus.ring(nvars), options.max_gens, options.max_exp));
  }
  std::vector<OracleComparison> out(ideals.size());
  parallelFor(ideals.size(), options.jobs,
              [&](std::size_t i) { out[i] = compareWithOracle(Subquotient::cyclic(ideals[i]), options.max_degree); });
  return out;
}

}  // namespace vnum
