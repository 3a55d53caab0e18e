#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace vnum {

using GridPoint = std::vector<std::int64_t>;

/// The integer box lo..hi (inclusive, componentwise). Points are enumerated
/// lexicographically, first coordinate slowest.
class GridBox {
 public:
  GridBox() = default;
  GridBox(GridPoint lo, GridPoint hi);
  /// [lo..hi]^r.
  static GridBox cube(std::size_t r, std::int64_t lo, std::int64_t hi);

  const GridPoint& lo() const { return lo_; }
  const GridPoint& hi() const { return hi_; }
  std::size_t rank() const { return lo_.size(); }
  std::size_t size() const;
  std::int64_t side(std::size_t i) const { return hi_[i] - lo_[i] + 1; }
  std::int64_t minSide() const;

  std::vector<GridPoint> points() const;
  bool contains(const GridPoint& p) const;
  /// Lexicographic position of `p`; requires contains(p).
  std::size_t indexOf(const GridPoint& p) const;

  /// The sub-box [t..hi] where each side keeps ceil(fraction * side) points
  /// (at least one).
  GridBox tail(double fraction) const;

  bool operator==(const GridBox& o) const = default;

 private:
  GridPoint lo_;
  GridPoint hi_;
};

/// Lower corner of the largest tail box [o..hi] of `box` on which `good`
/// holds everywhere (ties: lexicographically smallest o).
std::optional<GridPoint> largestGoodTail(const GridBox& box, const std::vector<bool>& good);

/// `(1,2)`.
std::string toString(const GridPoint& p);
/// `(1,1)..(6,6)`.
std::string toString(const GridBox& box);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
/// written to per-index slots by `fn`; the first exception (by index) is
/// rethrown after all workers finish.
template <class Fn>
void parallelFor(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min<std::size_t>(jobs, n);
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace vnum
