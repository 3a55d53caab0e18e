#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/pattern.hpp"

namespace vnum {

/// Seeded generator of random rings, ideals and families. Built on
/// std::mt19937_64 with its own range reduction, so a seed gives the same
/// corpus on every platform.
class RandomCorpus {
 public:
  explicit RandomCorpus(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Variables named x, y, z, w, ... then x4, x5, ...; weights in [1, max_weight].
  RingPtr ring(std::size_t nvars, std::int64_t max_weight = 1);

  /// Nonzero proper ideal with 1..max_gens random generators, exponents in
  /// [0, max_exp], no unit generator.
  MonomialIdeal ideal(const RingPtr& ring, std::size_t max_gens, std::int64_t max_exp);

  /// Ideal in the variables of `mask` only.
  MonomialIdeal idealIn(const RingPtr& ring, std::uint32_t mask, std::size_t max_gens,
                        std::int64_t max_exp);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct FamilyShape {
  std::size_t min_vars = 2;
  std::size_t max_vars = 3;
  std::size_t rank = 2;
  std::size_t max_gens = 3;
  std::int64_t max_exp = 3;
  std::int64_t max_weight = 1;
};

/// R/I^n over a polynomial ring (zero base, unit submodule).
ModulePattern randomPolynomialFamily(RandomCorpus& corpus, const FamilyShape& shape,
                                     PatternKind kind = PatternKind::QuotientByPower);

/// A family M = R/J0, N = K/J0 built so that (J0 : I_k) = J0 and a power of I
/// lands in K: J0 lives in a variable the ideals avoid, and K is R, J0 + I_k
/// or J0 + the product of the ideals. Callers still verify the hypotheses.
ModulePattern randomModuleFamily(RandomCorpus& corpus, const FamilyShape& shape,
                                 PatternKind kind = PatternKind::QuotientByPower);

}  // namespace vnum
