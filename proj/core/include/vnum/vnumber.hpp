#pragma once

#include <optional>
#include <string>

#include "vnum/ext_degree.hpp"
#include "vnum/prime.hpp"
#include "vnum/subquotient.hpp"

namespace vnum {

struct VNumberResult {
  /// Local result for `prime`, or the global v-number (then `prime` holds the
  /// associated prime attaining the minimum, if any).
  bool global = false;
  std::optional<MonomialPrime> prime;
  ExtDegree value;
  /// A monomial μ ∈ A with (B : μ) = prime and deg μ = value.
  std::optional<Monomial> witness;
};

/// v_p(A/B) = indeg(((B:p) ∩ A) / ((B:p) ∩ A ∩ (B : V^inf))) where V is the
/// product of the associated primes strictly containing p (V = R if none).
/// Throws NotAssociated if p is not in `ass`.
VNumberResult localVNumber(const Subquotient& s, const MonomialPrime& p, const AssSet& ass);
VNumberResult localVNumber(const Subquotient& s, const MonomialPrime& p);

/// Minimum of the local v-numbers; +inf for the zero module.
VNumberResult globalVNumber(const Subquotient& s);

/// Local v-number, or +inf when p is not associated (inf of the empty set).
ExtDegree localVNumberOrInf(const Subquotient& s, const MonomialPrime& p);

struct OracleOutcome {
  enum class Kind { Found, ExceedsCap };
  Kind kind = Kind::ExceedsCap;
  std::int64_t degree = 0;
  std::optional<Monomial> witness;

  bool found() const { return kind == Kind::Found; }
};

/// Enumerates monomials μ ∈ A by increasing degree up to `cap` and returns
/// the first degree where (B : μ) = p. Uses only ideal membership.
OracleOutcome bruteForceVNumber(const Subquotient& s, const MonomialPrime& p, std::int64_t cap);

/// If (B : μ) is a variable prime, returns it. Uses only ideal membership.
std::optional<MonomialPrime> annihilatorPrime(const MonomialIdeal& b, const Monomial& mu);

/// {"prime":[...]|"global","value":n|"inf","witness":"..."|null}
std::string toJson(const VNumberResult& r);

}  // namespace vnum
