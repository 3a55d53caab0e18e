#pragma once

#include <functional>
#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/prime.hpp"
#include "vnum/random_corpus.hpp"
#include "vnum/ring.hpp"

namespace vnum::testing {

/// Membership by scanning generators; deliberately independent of
/// MonomialIdeal::contains.
bool divides(const Monomial& a, const Monomial& b);
bool member(const MonomialIdeal& ideal, const Monomial& m);

/// Every exponent vector in [0, max_exp]^d.
std::vector<Monomial> boxMonomials(std::size_t nvars, std::int64_t max_exp);

/// First monomial of the box where `ideal` membership and `pred` disagree.
std::optional<Monomial> firstDisagreement(const MonomialIdeal& ideal, std::int64_t max_exp,
                                          const std::function<bool(const Monomial&)>& pred);

/// Product of ideals by all pairwise generator products, minimalized.
MonomialIdeal naiveProduct(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ass(R/B) from the irreducible components: their radicals.
std::vector<MonomialPrime> radicalsOfComponents(const std::vector<MonomialIdeal>& components);

/// A random B strictly inside A: A ∩ K, or A K when that intersection is A.
MonomialIdeal properSubideal(RandomCorpus& rng, const MonomialIdeal& a, std::size_t max_gens, std::int64_t max_exp);

}  // namespace vnum::testing
