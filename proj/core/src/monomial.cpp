#include "vnum/monomial.hpp"

#include <algorithm>

#include "vnum/error.hpp"

namespace vnum {

namespace {

void requireSize(std::size_t n) {
  if (n > kMaxVars) {
    throw Error(ErrorCode::TooManyVariables,
                "monomial: at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

void requireSameSize(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "monomials have different numbers of variables");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  requireSize(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<std::int64_t> exps)
    : Monomial(std::span<const std::int64_t>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const std::int64_t> exps) {
  requireSize(exps.size());
  n_ = static_cast<std::uint8_t>(exps.size());
  for (std::size_t i = 0; i < n_; ++i) {
    if (exps[i] < 0) throw Error(ErrorCode::InvalidArgument, "monomial exponents must be >= 0");
    e_[i] = exps[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::int64_t power) {
  Monomial m(nvars);
  if (i >= nvars) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "monomial exponents must be >= 0");
  m.e_[i] = power;
  return m;
}

bool Monomial::isUnit() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

std::int64_t Monomial::totalExponent() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) s = checkedAdd(s, e_[i]);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool Monomial::operator==(const Monomial& other) const {
  return n_ == other.n_ && std::equal(e_.begin(), e_.begin() + n_, other.e_.begin());
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != other.e_[i]) return e_[i] <=> other.e_[i];
  }
  return std::strong_ordering::equal;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  requireSameSize(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checkedAdd(a[i], b[i]);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  requireSameSize(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  requireSameSize(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Monomial colonQuotient(const Monomial& a, const Monomial& b) {
  requireSameSize(a, b);
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max<std::int64_t>(a[i] - b[i], 0);
  return out;
}

Monomial divide(const Monomial& a, const Monomial& b) {
  requireSameSize(a, b);
  if (!b.divides(a)) throw Error(ErrorCode::InvalidArgument, "monomial division is not exact");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Monomial pow(const Monomial& a, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial power");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checkedMul(a[i], k);
  return out;
}

std::int64_t degree(const RingSpec& ring, const Monomial& m) {
  if (m.size() != ring.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "monomial does not match the ring dimension");
  }
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d = checkedAdd(d, checkedMul(m[i], ring.weight(i)));
  return d;
}

bool canonicalLess(const RingSpec& ring, const Monomial& a, const Monomial& b) {
  const auto da = degree(ring, a);
  const auto db = degree(ring, b);
  if (da != db) return da < db;
  return a > b;
}

namespace {

void fillDegree(const RingSpec& ring, std::size_t i, std::int64_t left, Monomial& cur,
                std::vector<Monomial>& out) {
  if (i + 1 == ring.dim()) {
    if (left % ring.weight(i) == 0) {
      cur[i] = left / ring.weight(i);
      out.push_back(cur);
      cur[i] = 0;
    }
    return;
  }
  // Larger exponents on earlier variables first: canonical order within a degree.
  for (std::int64_t e = left / ring.weight(i); e >= 0; --e) {
    cur[i] = e;
    fillDegree(ring, i + 1, left - e * ring.weight(i), cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomialsOfDegree(const RingSpec& ring, std::int64_t deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  Monomial cur(ring.dim());
  fillDegree(ring, 0, deg, cur, out);
  return out;
}

std::string toString(const RingSpec& ring, const Monomial& m) {
  if (m.isUnit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace vnum
