#include "vnum/prime.hpp"

#include <algorithm>

#include "vnum/error.hpp"

namespace vnum {

MonomialPrime::MonomialPrime(RingPtr ring, std::uint32_t mask) : ring_(std::move(ring)), mask_(mask) {
  if (!ring_) throw Error(ErrorCode::InvalidArgument, "prime without a ring");
  const auto d = ring_->dim();
  if (d < 32 && (mask_ >> d) != 0) {
    throw Error(ErrorCode::DimensionMismatch, "prime refers to variables outside the ring");
  }
}

MonomialPrime MonomialPrime::fromIndices(RingPtr ring, const std::vector<std::size_t>& vars) {
  std::uint32_t mask = 0;
  for (auto i : vars) {
    if (i >= ring->dim()) throw Error(ErrorCode::DimensionMismatch, "prime variable index out of range");
    mask |= 1u << i;
  }
  return MonomialPrime(std::move(ring), mask);
}

MonomialPrime MonomialPrime::maximal(RingPtr ring) {
  const auto d = ring->dim();
  return MonomialPrime(std::move(ring), d >= 32 ? ~0u : (1u << d) - 1);
}

std::vector<std::size_t> MonomialPrime::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->dim(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::size_t MonomialPrime::size() const { return static_cast<std::size_t>(__builtin_popcount(mask_)); }

bool MonomialPrime::strictlyInside(const MonomialPrime& q) const {
  return mask_ != q.mask_ && (mask_ & ~q.mask_) == 0;
}

MonomialIdeal MonomialPrime::toIdeal() const {
  const auto idx = indices();
  return MonomialIdeal::variables(ring_, idx);
}

Monomial MonomialPrime::complementProduct() const {
  Monomial m(ring_->dim());
  for (std::size_t i = 0; i < ring_->dim(); ++i) m[i] = contains(i) ? 0 : 1;
  return m;
}

bool MonomialPrime::operator<(const MonomialPrime& o) const {
  const auto a = size(), b = o.size();
  if (a != b) return a < b;
  return indices() < o.indices();
}

std::string toString(const MonomialPrime& p) {
  if (p.mask() == 0) return "(0)";
  std::string out = "(";
  bool first = true;
  for (auto i : p.indices()) {
    if (!first) out += ',';
    first = false;
    out += p.ring()->name(i);
  }
  return out + ")";
}

AssSet::AssSet(std::vector<MonomialPrime> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool AssSet::contains(const MonomialPrime& p) const {
  return std::find(primes_.begin(), primes_.end(), p) != primes_.end();
}

bool AssSet::isSubsetOf(const AssSet& other) const {
  return std::all_of(primes_.begin(), primes_.end(),
                     [&](const MonomialPrime& p) { return other.contains(p); });
}

std::string toJson(const AssSet& set) {
  std::string out = "[";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += '[';
    bool first = true;
    const auto& p = set.primes()[k];
    for (auto i : p.indices()) {
      if (!first) out += ',';
      first = false;
      out += '"' + p.ring()->name(i) + '"';
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace vnum
