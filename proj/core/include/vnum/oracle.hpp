#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnum/prime.hpp"
#include "vnum/subquotient.hpp"

namespace vnum {

/// Result of checking the fast Ass and v-number routines against plain
/// enumeration of monomial witnesses.
struct OracleComparison {
  std::string module;
  /// Enumeration degree: the degree of the lcm of all generators. Capping a
  /// witness's exponents at that lcm keeps its annihilator, so no associated
  /// prime or least witness lies above it.
  std::int64_t bound = 0;
  bool skipped = false;  // bound above the configured maximum
  AssSet fast;
  AssSet enumerated;
  std::vector<std::string> mismatches;

  bool ok() const { return skipped || mismatches.empty(); }
};

/// Compares assSubquotient with the set of annihilator primes of monomials in
/// A \ B up to the bound (both inclusions), and localVNumber with
/// bruteForceVNumber at every associated prime.
OracleComparison compareWithOracle(const Subquotient& s, std::int64_t max_degree);

struct OracleCorpusOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_vars = 4;
  std::size_t max_gens = 5;
  std::int64_t max_exp = 4;
  std::int64_t max_degree = 24;
  unsigned jobs = 1;
};

/// Seeded random proper ideals B, each checked as R/B.
std::vector<OracleComparison> runOracleCorpus(const OracleCorpusOptions& options);

}  // namespace vnum
