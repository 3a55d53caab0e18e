#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vnum {

/// Maximum number of variables. Associated-prime detection scans all 2^d
/// variable subsets, so d is kept small.
inline constexpr std::size_t kMaxVars = 16;

/// A weighted N-graded polynomial ring K[x_1..x_d] with deg(x_i) = weights[i] >= 1.
class RingSpec {
 public:
  static std::shared_ptr<const RingSpec> make(std::vector<std::string> names,
                                              std::vector<std::int64_t> weights);
  /// Standard grading: every weight is 1.
  static std::shared_ptr<const RingSpec> standard(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::int64_t weight(std::size_t i) const { return weights_.at(i); }
  std::optional<std::size_t> indexOf(const std::string& name) const;

  bool operator==(const RingSpec& other) const = default;

 private:
  RingSpec(std::vector<std::string> names, std::vector<std::int64_t> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {}

  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

bool sameRing(const RingPtr& a, const RingPtr& b);
void requireSameRing(const RingPtr& a, const RingPtr& b);

}  // namespace vnum
