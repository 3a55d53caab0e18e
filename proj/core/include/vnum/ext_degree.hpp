#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace vnum {

/// An integer degree extended by +infinity. +inf is the initial degree (and
/// v-number) of the zero module.
class ExtDegree {
 public:
  constexpr ExtDegree() = default;  // +inf
  constexpr ExtDegree(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtDegree infinity() { return ExtDegree(); }

  constexpr bool isFinite() const { return finite_; }
  constexpr bool isInfinite() const { return !finite_; }
  /// Throws if infinite.
  std::int64_t value() const;

  constexpr bool operator==(const ExtDegree& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtDegree& o) const {
    if (!finite_ || !o.finite_) return o.finite_ <=> finite_;
    return value_ <=> o.value_;
  }

  /// Decimal integer or the literal `inf`.
  std::string toString() const;

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

}  // namespace vnum
