#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vnum/ring.hpp"

namespace vnum {

/// Exponent vector of a monomial. Storage is inline (no allocation); the
/// number of variables is fixed at construction and at most kMaxVars.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::int64_t> exps);
  explicit Monomial(std::span<const std::int64_t> exps);

  static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, std::int64_t power = 1);

  std::size_t size() const { return n_; }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::int64_t> exponents() const { return {e_.data(), n_}; }

  bool isUnit() const;
  /// Bitmask of variables with positive exponent.
  std::uint32_t support() const;
  /// Total (unweighted) exponent sum.
  std::int64_t totalExponent() const;

  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& other) const;
  /// Plain lexicographic comparison of exponent vectors.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::array<std::int64_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of (a) : b.
Monomial colonQuotient(const Monomial& a, const Monomial& b);
/// Exact quotient; requires b | a.
Monomial divide(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, std::int64_t k);

/// Weighted degree sum_i e_i * w_i.
std::int64_t degree(const RingSpec& ring, const Monomial& m);

/// Canonical order: weighted degree ascending, then lexicographically larger
/// exponent vector first (x^2 before x*y before y^2).
bool canonicalLess(const RingSpec& ring, const Monomial& a, const Monomial& b);

/// All monomials of weighted degree exactly `deg`, in canonical order.
std::vector<Monomial> monomialsOfDegree(const RingSpec& ring, std::int64_t deg);

/// `x^2*y*z^3`, or `1` for the unit monomial.
std::string toString(const RingSpec& ring, const Monomial& m);

}  // namespace vnum
