#include "vnum/random_corpus.hpp"

#include "vnum/error.hpp"

namespace vnum {

std::int64_t RandomCorpus::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty random range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

RingPtr RandomCorpus::ring(std::size_t nvars, std::int64_t max_weight) {
  static const char* const kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < nvars; ++i) {
    names.push_back(i < 4 ? kNames[i] : "x" + std::to_string(i));
    weights.push_back(uniform(1, max_weight));
  }
  return RingSpec::make(std::move(names), std::move(weights));
}

MonomialIdeal RandomCorpus::idealIn(const RingPtr& ring, std::uint32_t mask, std::size_t max_gens,
                                    std::int64_t max_exp) {
  if (mask == 0 || max_gens == 0 || max_exp < 1) {
    throw Error(ErrorCode::InvalidArgument, "random ideal needs variables, generators and exponents");
  }
  const auto d = ring->dim();
  const auto count = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_gens)));
  std::vector<Monomial> gens;
  while (gens.size() < count) {
    Monomial m(d);
    for (std::size_t i = 0; i < d; ++i) {
      if ((mask >> i) & 1u) m[i] = uniform(0, max_exp);
    }
    if (!m.isUnit()) gens.push_back(m);
  }
  return MonomialIdeal::minimalize(ring, std::move(gens));
}

MonomialIdeal RandomCorpus::ideal(const RingPtr& ring, std::size_t max_gens, std::int64_t max_exp) {
  return idealIn(ring, (1u << ring->dim()) - 1, max_gens, max_exp);
}

ModulePattern randomPolynomialFamily(RandomCorpus& corpus, const FamilyShape& shape, PatternKind kind) {
  const auto nvars = static_cast<std::size_t>(
      corpus.uniform(static_cast<std::int64_t>(shape.min_vars), static_cast<std::int64_t>(shape.max_vars)));
  const auto ring = corpus.ring(nvars, shape.max_weight);
  std::vector<MonomialIdeal> ideals;
  for (std::size_t k = 0; k < shape.rank; ++k) ideals.push_back(corpus.ideal(ring, shape.max_gens, shape.max_exp));
  return ModulePattern::simple(kind, std::move(ideals));
}

ModulePattern randomModuleFamily(RandomCorpus& corpus, const FamilyShape& shape, PatternKind kind) {
  const auto nvars = static_cast<std::size_t>(
      corpus.uniform(static_cast<std::int64_t>(shape.min_vars), static_cast<std::int64_t>(shape.max_vars)));
  // One extra variable carries J0.
  const auto ring = corpus.ring(nvars + 1, shape.max_weight);
  const std::uint32_t idealMask = (1u << nvars) - 1;
  const std::uint32_t baseMask = 1u << nvars;
  std::vector<MonomialIdeal> ideals;
  for (std::size_t k = 0; k < shape.rank; ++k) {
    ideals.push_back(corpus.idealIn(ring, idealMask, shape.max_gens, shape.max_exp));
  }
  const auto base = corpus.coin() ? MonomialIdeal::zero(ring) : corpus.idealIn(ring, baseMask, 1, shape.max_exp);
  MonomialIdeal sub = MonomialIdeal::unit(ring);
  switch (corpus.uniform(0, 2)) {
    case 0: break;
    case 1: {
      const auto k = static_cast<std::size_t>(corpus.uniform(0, static_cast<std::int64_t>(shape.rank) - 1));
      sub = sum(base, ideals[k]);
      break;
    }
    default: {
      auto prod = MonomialIdeal::unit(ring);
      for (const auto& I : ideals) prod = product(prod, I);
      sub = sum(base, prod);
      break;
    }
  }
  return ModulePattern::make(kind, base, std::move(ideals), sub);
}

}  // namespace vnum
