#include "vnum/ideal.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "vnum/error.hpp"

namespace vnum {

namespace {

struct Keyed {
  std::int64_t degree;
  std::uint32_t support;
  Monomial m;
};

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(RingPtr ring, std::vector<Monomial> gens) {
  if (!ring) throw Error(ErrorCode::InvalidArgument, "ideal without a ring");
  std::vector<Keyed> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) {
    if (g.size() != ring->dim()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator has " + std::to_string(g.size()) + " exponents, ring has " +
                      std::to_string(ring->dim()) + " variables");
    }
    keyed.push_back({degree(*ring, g), g.support(), g});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.m > b.m;
  });
  // A proper divisor has strictly smaller degree (weights >= 1), so it is
  // always examined before its multiples.
  std::vector<Keyed> kept;
  for (auto& k : keyed) {
    if (!kept.empty() && kept.back().m == k.m) continue;
    bool redundant = false;
    for (const auto& g : kept) {
      if ((g.support & ~k.support) == 0 && g.m.divides(k.m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(k));
  }
  std::vector<Monomial> out;
  out.reserve(kept.size());
  for (auto& k : kept) out.push_back(k.m);
  return MonomialIdeal(std::move(ring), std::move(out));
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) { return minimalize(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const auto d = ring->dim();
  return minimalize(std::move(ring), {Monomial::unit(d)});
}

MonomialIdeal MonomialIdeal::variables(RingPtr ring, std::span<const std::size_t> vars) {
  std::vector<Monomial> gens;
  for (auto i : vars) gens.push_back(Monomial::variable(ring->dim(), i));
  return minimalize(std::move(ring), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != ring_->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "monomial does not match the ring dimension");
  }
  const auto supp = m.support();
  for (const auto& g : gens_) {
    if ((g.support() & ~supp) == 0 && g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::isSubsetOf(const MonomialIdeal& other) const {
  requireSameRing(ring_, other.ring_);
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return other.contains(g); });
}

std::vector<std::int64_t> MonomialIdeal::generatorDegrees() const {
  std::set<std::int64_t> degs;
  for (const auto& g : gens_) degs.insert(degree(*ring_, g));
  return {degs.begin(), degs.end()};
}

ExtDegree MonomialIdeal::indeg() const {
  if (gens_.empty()) return ExtDegree::infinity();
  return degree(*ring_, gens_.front());
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return sameRing(ring_, other.ring_) && gens_ == other.gens_;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameRing(a.ring(), b.ring());
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimalize(a.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameRing(a.ring(), b.ring());
  if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> gens;
  // Generators of one ideal lying in the other are generators of the
  // intersection and make every lcm they take part in redundant.
  std::vector<char> bInA(b.numGens());
  for (std::size_t j = 0; j < b.numGens(); ++j) {
    bInA[j] = a.contains(b.gens()[j]);
    if (bInA[j]) gens.push_back(b.gens()[j]);
  }
  for (const auto& g : a.gens()) {
    if (b.contains(g)) {
      gens.push_back(g);
      continue;
    }
    for (std::size_t j = 0; j < b.numGens(); ++j) {
      if (!bInA[j]) gens.push_back(lcm(g, b.gens()[j]));
    }
  }
  return MonomialIdeal::minimalize(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameRing(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.numGens() * b.numGens());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(g * h);
  }
  return MonomialIdeal::minimalize(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative ideal power");
  if (k == 0) return MonomialIdeal::unit(a.ring());
  MonomialIdeal out = a;
  for (std::int64_t i = 1; i < k; ++i) out = product(out, a);
  return out;
}

MonomialIdeal multiPower(std::span<const MonomialIdeal> ideals, std::span<const std::int64_t> n) {
  if (ideals.size() != n.size()) {
    throw Error(ErrorCode::DimensionMismatch, "multiPower: one exponent per ideal is required");
  }
  if (ideals.empty()) throw Error(ErrorCode::InvalidArgument, "multiPower: no ideals");
  MonomialIdeal out = MonomialIdeal::unit(ideals.front().ring());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    requireSameRing(out.ring(), ideals[i].ring());
    if (n[i] < 0) throw Error(ErrorCode::InvalidArgument, "multiPower: negative exponent");
    if (n[i] > 0) out = product(out, power(ideals[i], n[i]));
  }
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.numGens());
  for (const auto& g : ideal.gens()) gens.push_back(colonQuotient(g, m));
  return MonomialIdeal::minimalize(ideal.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  requireSameRing(ideal.ring(), by.ring());
  if (by.isZero()) throw Error(ErrorCode::ColonByZero, "colon by the zero ideal");
  MonomialIdeal out = colon(ideal, by.gens().front());
  for (std::size_t j = 1; j < by.numGens(); ++j) out = intersect(out, colon(ideal, by.gens()[j]));
  return out;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& m) {
  const auto supp = m.support();
  std::vector<Monomial> gens;
  gens.reserve(ideal.numGens());
  for (auto g : ideal.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if ((supp >> i) & 1u) g[i] = 0;
    }
    gens.push_back(g);
  }
  return MonomialIdeal::minimalize(ideal.ring(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  requireSameRing(ideal.ring(), by.ring());
  if (by.isZero()) throw Error(ErrorCode::ColonByZero, "saturation by the zero ideal");
  std::vector<std::uint32_t> supports;
  for (const auto& g : by.gens()) supports.push_back(g.support());
  std::sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    const bool covered = std::any_of(minimal.begin(), minimal.end(),
                                     [s](std::uint32_t t) { return (t & ~s) == 0; });
    if (!covered) minimal.push_back(s);
  }
  const auto d = ideal.ring()->dim();
  std::optional<MonomialIdeal> out;
  for (auto s : minimal) {
    Monomial m(d);
    for (std::size_t i = 0; i < d; ++i) m[i] = (s >> i) & 1u;
    auto part = saturate(ideal, m);
    out = out ? intersect(*out, part) : std::move(part);
  }
  return *out;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    Monomial r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(r);
  }
  return MonomialIdeal::minimalize(ideal.ring(), std::move(gens));
}

bool inRadical(const MonomialIdeal& ideal, const Monomial& m) {
  const auto supp = m.support();
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [supp](const Monomial& g) { return (g.support() & ~supp) == 0; });
}

bool isRadical(const MonomialIdeal& ideal) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(), [](const Monomial& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 1) return false;
    }
    return true;
  });
}

std::string toString(const MonomialIdeal& ideal) {
  if (ideal.isZero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.numGens(); ++i) {
    if (i) out += ", ";
    out += toString(*ideal.ring(), ideal.gens()[i]);
  }
  return out + ")";
}

}  // namespace vnum
