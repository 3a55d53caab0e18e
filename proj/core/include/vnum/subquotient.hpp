#pragma once

#include <optional>
#include <string>

#include "vnum/ext_degree.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

/// The graded module A/B for monomial ideals B ⊆ A.
class Subquotient {
 public:
  /// Throws InvalidSubquotient unless B ⊆ A over the same ring.
  Subquotient(MonomialIdeal a, MonomialIdeal b);

  /// R/B.
  static Subquotient cyclic(MonomialIdeal b);

  const MonomialIdeal& top() const { return a_; }
  const MonomialIdeal& bottom() const { return b_; }
  const RingPtr& ring() const { return a_.ring(); }
  bool isZero() const { return a_ == b_; }
  bool isCyclic() const { return a_.isUnit(); }

 private:
  MonomialIdeal a_;
  MonomialIdeal b_;
};

struct IndegResult {
  ExtDegree value;
  /// Canonically smallest generator of A outside B of least degree.
  std::optional<Monomial> witness;
};

/// indeg(A/B). Every monomial of A \ B is a multiple of a minimal generator
/// of A that is not in B, so the minimum over those generators is exact.
IndegResult indegQuotient(const Subquotient& s);

std::string toString(const Subquotient& s);

}  // namespace vnum
