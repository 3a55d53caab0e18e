#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

/// A prime generated by a subset of the variables. The empty subset is the
/// zero prime.
class MonomialPrime {
 public:
  MonomialPrime(RingPtr ring, std::uint32_t mask);
  static MonomialPrime fromIndices(RingPtr ring, const std::vector<std::size_t>& vars);
  static MonomialPrime maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t mask() const { return mask_; }
  std::vector<std::size_t> indices() const;
  std::size_t size() const;
  bool contains(std::size_t var) const { return (mask_ >> var) & 1u; }

  /// p ⊊ q.
  bool strictlyInside(const MonomialPrime& q) const;

  MonomialIdeal toIdeal() const;
  /// Product of the variables not in the prime.
  Monomial complementProduct() const;

  bool operator==(const MonomialPrime& o) const { return mask_ == o.mask_; }
  /// Canonical order: by cardinality, then lexicographically by sorted indices.
  bool operator<(const MonomialPrime& o) const;

 private:
  RingPtr ring_;
  std::uint32_t mask_;
};

/// `(x,z)`; `(0)` for the zero prime.
std::string toString(const MonomialPrime& p);

/// A canonically ordered set of monomial primes.
class AssSet {
 public:
  AssSet() = default;
  explicit AssSet(std::vector<MonomialPrime> primes);

  const std::vector<MonomialPrime>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  bool contains(const MonomialPrime& p) const;
  bool isSubsetOf(const AssSet& other) const;

  bool operator==(const AssSet& o) const { return primes_ == o.primes_; }

 private:
  std::vector<MonomialPrime> primes_;
};

/// `[["x","z"],["y","z"],["x","y","z"]]`.
std::string toJson(const AssSet& set);

}  // namespace vnum
