#pragma once

#include <string>
#include <vector>

#include "vnum/grid.hpp"
#include "vnum/ideal.hpp"
#include "vnum/subquotient.hpp"

namespace vnum {

enum class PatternKind {
  QuotientByPower,   // M / I^n N
  PowerSubquotient,  // I^n M / I^n N
  SuccessivePower,   // I^n M / I^{n+1} N
};

const char* patternKindName(PatternKind kind);

/// A family of monomial modules indexed by n in N^r. The ambient module is
/// M = R/J0 (J0 = `base`) and the submodule is N = K/J0 (K = `submodule`,
/// containing J0).
struct ModulePattern {
  RingPtr ring;
  MonomialIdeal base;
  std::vector<MonomialIdeal> ideals;
  MonomialIdeal submodule;
  PatternKind kind = PatternKind::QuotientByPower;

  /// Validates ring agreement, J0 ⊆ K and nonzero ideals.
  static ModulePattern make(PatternKind kind, MonomialIdeal base,
                            std::vector<MonomialIdeal> ideals, MonomialIdeal submodule);
  /// Polynomial ring, N = M = R.
  static ModulePattern simple(PatternKind kind, std::vector<MonomialIdeal> ideals);

  std::size_t rank() const { return ideals.size(); }
  bool hasZeroBase() const { return base.isZero(); }
  bool hasUnitSubmodule() const { return submodule.isUnit(); }

  ModulePattern withKind(PatternKind k) const;
};

/// The subquotient of the family at n. Powers are taken in the polynomial
/// ring and J0 is added afterwards.
Subquotient instantiate(const ModulePattern& pattern, std::span<const std::int64_t> n);

/// `quotient(base=(x*y); powers (x, y^2),(x^2, y); sub=(1))`.
std::string describe(const ModulePattern& pattern);

}  // namespace vnum
