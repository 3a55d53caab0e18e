#include "vnum/vnumber.hpp"

#include <algorithm>

#include "json.hpp"
#include "vnum/ass.hpp"
#include "vnum/error.hpp"

namespace vnum {

VNumberResult localVNumber(const Subquotient& s, const MonomialPrime& p, const AssSet& ass) {
  if (!ass.contains(p)) {
    throw Error(ErrorCode::NotAssociated, "prime " + toString(p) + " is not associated to the module");
  }
  const auto& ring = s.ring();
  const auto& a = s.top();
  const auto& b = s.bottom();

  // V = product of the associated primes strictly containing p, or R.
  auto v = MonomialIdeal::unit(ring);
  for (const auto& q : ass.primes()) {
    if (p.strictlyInside(q)) v = product(v, q.toIdeal());
  }
  // ann_M(p) = ((B : p) ∩ A)/B and Γ_V(M) = ((B : V^inf) ∩ A)/B.
  const auto annihilated = p.mask() == 0 ? a : intersect(colon(b, p.toIdeal()), a);
  const auto torsion = saturate(b, v);

  // Generators of `annihilated` outside `torsion` are exactly those outside
  // annihilated ∩ torsion; the first in canonical order has least degree.
  VNumberResult out;
  out.prime = p;
  for (const auto& g : annihilated.gens()) {
    if (!torsion.contains(g)) {
      out.value = degree(*ring, g);
      out.witness = g;
      return out;
    }
  }
  throw Error(ErrorCode::NotAssociated,
              "prime " + toString(p) + " has no witness; the supplied Ass set is inconsistent");
}

VNumberResult localVNumber(const Subquotient& s, const MonomialPrime& p) {
  return localVNumber(s, p, assSubquotient(s));
}

VNumberResult globalVNumber(const Subquotient& s) {
  VNumberResult best;
  best.global = true;
  if (s.isZero()) return best;
  const auto ass = assSubquotient(s);
  for (const auto& p : ass.primes()) {
    auto local = localVNumber(s, p, ass);
    if (local.value < best.value) {
      best.value = local.value;
      best.prime = local.prime;
      best.witness = local.witness;
    }
  }
  return best;
}

ExtDegree localVNumberOrInf(const Subquotient& s, const MonomialPrime& p) {
  if (s.isZero()) return ExtDegree::infinity();
  const auto ass = assSubquotient(s);
  if (!ass.contains(p)) return ExtDegree::infinity();
  return localVNumber(s, p, ass).value;
}

std::optional<MonomialPrime> annihilatorPrime(const MonomialIdeal& b, const Monomial& mu) {
  if (b.contains(mu)) return std::nullopt;
  const auto d = b.ring()->dim();
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (b.contains(mu * Monomial::variable(d, i))) mask |= 1u << i;
  }
  // (B : μ) ⊆ p unless some monomial in the remaining variables multiplies μ
  // into B; raising them to the largest generator exponent detects that.
  std::int64_t top = 0;
  for (const auto& g : b.gens()) {
    for (std::size_t i = 0; i < d; ++i) top = std::max(top, g[i]);
  }
  auto probe = mu;
  for (std::size_t i = 0; i < d; ++i) {
    if (!((mask >> i) & 1u)) probe[i] = checkedAdd(probe[i], top);
  }
  if (b.contains(probe)) return std::nullopt;
  return MonomialPrime(b.ring(), mask);
}

OracleOutcome bruteForceVNumber(const Subquotient& s, const MonomialPrime& p, std::int64_t cap) {
  if (cap < 0) throw Error(ErrorCode::InvalidArgument, "oracle degree cap must be >= 0");
  const auto& ring = *s.ring();
  for (std::int64_t k = 0; k <= cap; ++k) {
    for (const auto& mu : monomialsOfDegree(ring, k)) {
      if (!s.top().contains(mu)) continue;
      const auto ann = annihilatorPrime(s.bottom(), mu);
      if (ann && *ann == p) return {OracleOutcome::Kind::Found, k, mu};
    }
  }
  return {};
}

std::string toJson(const VNumberResult& r) {
  nlohmann::ordered_json j;
  auto primeJson = [](const MonomialPrime& p) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (auto i : p.indices()) names.push_back(p.ring()->name(i));
    return names;
  };
  if (r.global) {
    j["prime"] = "global";
  } else if (r.prime) {
    j["prime"] = primeJson(*r.prime);
  } else {
    j["prime"] = nullptr;
  }
  if (r.value.isFinite()) {
    j["value"] = r.value.value();
  } else {
    j["value"] = "inf";
  }
  if (r.witness && r.prime) {
    j["witness"] = toString(*r.prime->ring(), *r.witness);
  } else {
    j["witness"] = nullptr;
  }
  if (r.global) {
    j["attained_at"] = r.prime ? primeJson(*r.prime) : nlohmann::ordered_json(nullptr);
  }
  return j.dump();
}

}  // namespace vnum
