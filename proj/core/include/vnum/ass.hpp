#pragma once

#include <vector>

#include "vnum/grid.hpp"
#include "vnum/pattern.hpp"
#include "vnum/prime.hpp"
#include "vnum/subquotient.hpp"

namespace vnum {

/// Ass(R/B). A variable prime p is associated iff (B : p) ⊄ (B : u_p^inf),
/// u_p the product of the variables outside p. Throws EmptyModule for the
/// unit ideal and TooManyVariables beyond kMaxVars.
AssSet assCyclic(const MonomialIdeal& b);

/// Ass(A/B): p is associated iff ((B : p) ∩ A) ⊄ (B : u_p^inf).
/// Throws EmptyModule when A = B.
AssSet assSubquotient(const Subquotient& s);

/// Irredundant decomposition of a proper monomial ideal into ideals generated
/// by pure powers of variables.
std::vector<MonomialIdeal> irreducibleDecomposition(const MonomialIdeal& b);

enum class StabilityVerdict { Stable, Inconclusive };

struct StableAssReport {
  AssSet stable_set;
  /// Lower corner of the largest tail box [onset..hi] on which Ass is constant.
  GridPoint onset;
  /// That tail box.
  GridBox window;
  StabilityVerdict verdict = StabilityVerdict::Inconclusive;
};

struct StableAssOptions {
  /// The constant tail box must have every side at least this long.
  std::int64_t min_side = 3;
  unsigned jobs = 1;
};

/// Evaluates Ass of the family at every point of `box` and reports the
/// largest tail box where it is constant. Zero modules contribute the empty
/// set; a family that is zero at every point throws EmptyModule.
StableAssReport stableAssWindow(const ModulePattern& family, const GridBox& box,
                                const StableAssOptions& options = {});

}  // namespace vnum
