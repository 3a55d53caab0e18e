#include "vnum/subquotient.hpp"

#include "vnum/error.hpp"

namespace vnum {

Subquotient::Subquotient(MonomialIdeal a, MonomialIdeal b) : a_(std::move(a)), b_(std::move(b)) {
  requireSameRing(a_.ring(), b_.ring());
  if (!b_.isSubsetOf(a_)) {
    throw Error(ErrorCode::InvalidSubquotient,
                "subquotient requires B ⊆ A, got A = " + toString(a_) + ", B = " + toString(b_));
  }
}

Subquotient Subquotient::cyclic(MonomialIdeal b) {
  auto unit = MonomialIdeal::unit(b.ring());
  return Subquotient(std::move(unit), std::move(b));
}

IndegResult indegQuotient(const Subquotient& s) {
  // Generators are in canonical order, so the first one outside B has the
  // least degree and is the canonically smallest among those.
  for (const auto& g : s.top().gens()) {
    if (!s.bottom().contains(g)) return {degree(*s.ring(), g), g};
  }
  return {ExtDegree::infinity(), std::nullopt};
}

std::string toString(const Subquotient& s) {
  return toString(s.top()) + " / " + toString(s.bottom());
}

}  // namespace vnum
