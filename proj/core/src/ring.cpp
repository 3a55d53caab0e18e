#include "vnum/ring.hpp"

#include <set>

#include "vnum/error.hpp"

namespace vnum {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::RingMismatch: return "ring mismatch";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::ColonByZero: return "colon by zero ideal";
    case ErrorCode::EmptyModule: return "empty module";
    case ErrorCode::InvalidSubquotient: return "invalid subquotient";
    case ErrorCode::NotAssociated: return "prime not associated";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::TooManyVariables: return "too many variables";
  }
  return "unknown";
}

std::shared_ptr<const RingSpec> RingSpec::make(std::vector<std::string> names,
                                               std::vector<std::int64_t> weights) {
  if (names.empty()) throw Error(ErrorCode::InvalidArgument, "ring needs at least one variable");
  if (names.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "ring: number of weights differs from number of variables");
  }
  if (names.size() > kMaxVars) {
    throw Error(ErrorCode::TooManyVariables,
                "ring: at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::InvalidArgument, "ring: empty variable name");
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::InvalidArgument, "ring: duplicate variable name '" + n + "'");
    }
  }
  for (auto w : weights) {
    // Weight-0 variables would make every graded piece infinite-dimensional.
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "ring: variable weights must be >= 1");
  }
  return std::shared_ptr<const RingSpec>(new RingSpec(std::move(names), std::move(weights)));
}

std::shared_ptr<const RingSpec> RingSpec::standard(std::vector<std::string> names) {
  std::vector<std::int64_t> weights(names.size(), 1);
  return make(std::move(names), std::move(weights));
}

std::optional<std::size_t> RingSpec::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool sameRing(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void requireSameRing(const RingPtr& a, const RingPtr& b) {
  if (!sameRing(a, b)) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

}  // namespace vnum
