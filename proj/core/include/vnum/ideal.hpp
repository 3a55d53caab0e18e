#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vnum/ext_degree.hpp"
#include "vnum/monomial.hpp"
#include "vnum/ring.hpp"

namespace vnum {

/// A monomial ideal stored by its canonical minimal generating set: no
/// generator divides another, sorted by canonicalLess. The zero ideal has no
/// generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
 public:
  /// Reduces `gens` to the canonical minimal generating set.
  static MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);
  /// The ideal generated by the variables listed in `vars`.
  static MonomialIdeal variables(RingPtr ring, std::span<const std::size_t> vars);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t numGens() const { return gens_.size(); }

  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && gens_.front().isUnit(); }
  bool isProper() const { return !isUnit(); }

  bool contains(const Monomial& m) const;
  /// this ⊆ other.
  bool isSubsetOf(const MonomialIdeal& other) const;

  /// Distinct weighted degrees of the minimal generators, ascending.
  std::vector<std::int64_t> generatorDegrees() const;
  /// Least generator degree; +inf for the zero ideal.
  ExtDegree indeg() const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::int64_t k);
/// I_1^{n_1} ... I_r^{n_r}; the empty product is the unit ideal.
MonomialIdeal multiPower(std::span<const MonomialIdeal> ideals, std::span<const std::int64_t> n);

/// (I : m) for a single monomial.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// (I : J) as the intersection of (I : g) over the generators g of J.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// (I : m^inf): exponents of the variables in supp(m) are dropped.
MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& m);
/// (I : J^inf) = intersection of (I : g^inf) over generators g of J with
/// inclusion-minimal support.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

MonomialIdeal radical(const MonomialIdeal& ideal);
bool inRadical(const MonomialIdeal& ideal, const Monomial& m);
/// True when every minimal generator is squarefree (the ideal equals its radical).
bool isRadical(const MonomialIdeal& ideal);

/// `(x^2, y*z^2)`; `(0)` and `(1)` for the zero and unit ideals.
std::string toString(const MonomialIdeal& ideal);

}  // namespace vnum
