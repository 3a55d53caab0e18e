#include "vnum/pattern.hpp"

#include "vnum/error.hpp"

namespace vnum {

const char* patternKindName(PatternKind kind) {
  switch (kind) {
    case PatternKind::QuotientByPower: return "quotient";
    case PatternKind::PowerSubquotient: return "power_subquotient";
    case PatternKind::SuccessivePower: return "successive";
  }
  return "?";
}

ModulePattern ModulePattern::make(PatternKind kind, MonomialIdeal base, std::vector<MonomialIdeal> ideals,
                                  MonomialIdeal submodule) {
  if (ideals.empty()) throw Error(ErrorCode::InvalidArgument, "pattern needs at least one ideal");
  const auto ring = base.ring();
  requireSameRing(ring, submodule.ring());
  for (const auto& I : ideals) {
    requireSameRing(ring, I.ring());
    if (I.isZero()) throw Error(ErrorCode::InvalidArgument, "pattern ideals must be nonzero");
  }
  if (!base.isSubsetOf(submodule)) {
    throw Error(ErrorCode::InvalidArgument, "pattern requires base ⊆ submodule ideal");
  }
  return ModulePattern{ring, std::move(base), std::move(ideals), std::move(submodule), kind};
}

ModulePattern ModulePattern::simple(PatternKind kind, std::vector<MonomialIdeal> ideals) {
  if (ideals.empty()) throw Error(ErrorCode::InvalidArgument, "pattern needs at least one ideal");
  const auto ring = ideals.front().ring();
  return make(kind, MonomialIdeal::zero(ring), std::move(ideals), MonomialIdeal::unit(ring));
}

ModulePattern ModulePattern::withKind(PatternKind k) const {
  auto copy = *this;
  copy.kind = k;
  return copy;
}

Subquotient instantiate(const ModulePattern& pattern, std::span<const std::int64_t> n) {
  if (n.size() != pattern.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "grid point rank differs from the number of ideals");
  }
  const auto powerN = multiPower(pattern.ideals, n);
  switch (pattern.kind) {
    case PatternKind::QuotientByPower:
      return Subquotient(MonomialIdeal::unit(pattern.ring),
                         sum(product(powerN, pattern.submodule), pattern.base));
    case PatternKind::PowerSubquotient:
      return Subquotient(sum(powerN, pattern.base), sum(product(powerN, pattern.submodule), pattern.base));
    case PatternKind::SuccessivePower: {
      auto next = powerN;
      for (const auto& I : pattern.ideals) next = product(next, I);
      return Subquotient(sum(powerN, pattern.base), sum(product(next, pattern.submodule), pattern.base));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pattern kind");
}

std::string describe(const ModulePattern& pattern) {
  std::string out = patternKindName(pattern.kind);
  out += "(base=" + toString(pattern.base) + "; powers ";
  for (std::size_t i = 0; i < pattern.ideals.size(); ++i) {
    if (i) out += ",";
    out += toString(pattern.ideals[i]);
  }
  out += "; sub=" + toString(pattern.submodule) + ")";
  return out;
}

}  // namespace vnum
