#include "vnum/ass.hpp"

#include <algorithm>

#include "vnum/error.hpp"

namespace vnum {

namespace {

// p = (x_i : i in mask) is associated to A/B iff some monomial of
// (B : p) ∩ A avoids (B : u^inf), u the product of the variables outside p:
// such a monomial f has (B : f) ⊇ p and no power of u in (B : f), which
// forces (B : f) = p; conversely a witness of p lies in that difference.
AssSet associatedPrimes(const MonomialIdeal& a, const MonomialIdeal& b) {
  const auto& ring = b.ring();
  const std::size_t d = ring->dim();
  if (d > kMaxVars) throw Error(ErrorCode::TooManyVariables, "too many variables for Ass");
  const std::uint32_t full = (1u << d) - 1;

  std::vector<MonomialIdeal> varColon;
  varColon.reserve(d);
  for (std::size_t i = 0; i < d; ++i) varColon.push_back(colon(b, Monomial::variable(d, i)));

  // colons[mask] = (B : p_mask), built from the mask with its lowest bit cleared.
  std::vector<std::optional<MonomialIdeal>> colons(std::size_t{1} << d);
  const bool cyclic = a.isUnit();
  std::vector<MonomialPrime> found;
  if (b.isZero()) found.emplace_back(ring, 0u);  // R is a domain: the zero prime
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctz(mask));
    const std::uint32_t rest = mask & (mask - 1);
    colons[mask] = rest == 0 ? varColon[low] : intersect(*colons[rest], varColon[low]);
    if (b.isZero()) continue;
    const MonomialPrime p(ring, mask);
    const auto inside = cyclic ? *colons[mask] : intersect(*colons[mask], a);
    const auto torsion = mask == full ? b : saturate(b, p.complementProduct());
    if (!inside.isSubsetOf(torsion)) found.push_back(p);
  }
  return AssSet(std::move(found));
}

std::vector<MonomialIdeal> splitIrreducible(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens()) {
    const auto supp = g.support();
    if (__builtin_popcount(supp) < 2) continue;
    const auto i = static_cast<std::size_t>(__builtin_ctz(supp));
    auto rest = g;
    rest[i] = 0;
    const auto pure = Monomial::variable(g.size(), i, g[i]);
    auto left = splitIrreducible(sum(ideal, MonomialIdeal::minimalize(ideal.ring(), {pure})));
    auto right = splitIrreducible(sum(ideal, MonomialIdeal::minimalize(ideal.ring(), {rest})));
    left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
    return left;
  }
  return {ideal};
}

}  // namespace

AssSet assCyclic(const MonomialIdeal& b) {
  if (b.isUnit()) throw Error(ErrorCode::EmptyModule, "Ass(R/B) with B the unit ideal");
  return associatedPrimes(MonomialIdeal::unit(b.ring()), b);
}

AssSet assSubquotient(const Subquotient& s) {
  if (s.isZero()) throw Error(ErrorCode::EmptyModule, "Ass of the zero module");
  return associatedPrimes(s.top(), s.bottom());
}

std::vector<MonomialIdeal> irreducibleDecomposition(const MonomialIdeal& b) {
  if (b.isUnit()) throw Error(ErrorCode::EmptyModule, "decomposition of the unit ideal");
  auto parts = splitIrreducible(b);
  std::vector<MonomialIdeal> unique;
  for (auto& p : parts) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  }
  // Irreducible monomial ideals are meet-prime in the (distributive) lattice
  // of monomial ideals, so dropping components that contain another one
  // leaves an irredundant decomposition.
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < unique.size() && !redundant; ++j) {
      redundant = j != i && unique[j].isSubsetOf(unique[i]);
    }
    if (!redundant) out.push_back(unique[i]);
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& x, const MonomialIdeal& y) {
    const auto& ring = *x.ring();
    return std::lexicographical_compare(
        x.gens().begin(), x.gens().end(), y.gens().begin(), y.gens().end(),
        [&](const Monomial& m1, const Monomial& m2) { return canonicalLess(ring, m1, m2); });
  });
  return out;
}

StableAssReport stableAssWindow(const ModulePattern& family, const GridBox& box,
                                const StableAssOptions& options) {
  const auto points = box.points();
  std::vector<AssSet> sets(points.size());
  std::vector<char> nonzero(points.size());
  parallelFor(points.size(), options.jobs, [&](std::size_t i) {
    const auto s = instantiate(family, points[i]);
    nonzero[i] = !s.isZero();
    if (nonzero[i]) sets[i] = assSubquotient(s);
  });
  if (std::none_of(nonzero.begin(), nonzero.end(), [](char c) { return c != 0; })) {
    throw Error(ErrorCode::EmptyModule, "the family is the zero module at every grid point");
  }
  const auto& last = sets.back();
  std::vector<bool> good(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) good[i] = sets[i] == last;
  StableAssReport report;
  report.stable_set = last;
  report.onset = *largestGoodTail(box, good);
  report.window = GridBox(report.onset, box.hi());
  report.verdict = report.window.minSide() >= options.min_side ? StabilityVerdict::Stable
                                                               : StabilityVerdict::Inconclusive;
  return report;
}

}  // namespace vnum
