#include "vnum/grid.hpp"

#include <cmath>

#include "vnum/error.hpp"

namespace vnum {

GridBox::GridBox(GridPoint lo, GridPoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) throw Error(ErrorCode::DimensionMismatch, "grid box corners differ in rank");
  if (lo_.empty()) throw Error(ErrorCode::InvalidArgument, "grid box of rank 0");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (lo_[i] < 0) throw Error(ErrorCode::InvalidArgument, "grid box coordinates must be >= 0");
    if (lo_[i] > hi_[i]) throw Error(ErrorCode::InvalidArgument, "grid box requires lo <= hi");
  }
}

GridBox GridBox::cube(std::size_t r, std::int64_t lo, std::int64_t hi) {
  return GridBox(GridPoint(r, lo), GridPoint(r, hi));
}

std::size_t GridBox::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank(); ++i) n *= static_cast<std::size_t>(side(i));
  return n;
}

std::int64_t GridBox::minSide() const {
  std::int64_t m = side(0);
  for (std::size_t i = 1; i < rank(); ++i) m = std::min(m, side(i));
  return m;
}

std::vector<GridPoint> GridBox::points() const {
  std::vector<GridPoint> out;
  out.reserve(size());
  GridPoint p = lo_;
  while (true) {
    out.push_back(p);
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (p[i] < hi_[i]) {
        ++p[i];
        break;
      }
      p[i] = lo_[i];
      if (i == 0) return out;
    }
  }
}

bool GridBox::contains(const GridPoint& p) const {
  if (p.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

std::size_t GridBox::indexOf(const GridPoint& p) const {
  if (!contains(p)) throw Error(ErrorCode::InvalidArgument, "point " + toString(p) + " outside the box");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    idx = idx * static_cast<std::size_t>(side(i)) + static_cast<std::size_t>(p[i] - lo_[i]);
  }
  return idx;
}

GridBox GridBox::tail(double fraction) const {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "tail fraction must lie in (0, 1]");
  }
  GridPoint lo(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    auto keep = static_cast<std::int64_t>(std::ceil(fraction * static_cast<double>(side(i)) - 1e-9));
    keep = std::max<std::int64_t>(keep, 1);
    lo[i] = hi_[i] - keep + 1;
  }
  return GridBox(lo, hi_);
}

std::optional<GridPoint> largestGoodTail(const GridBox& box, const std::vector<bool>& good) {
  if (good.size() != box.size()) throw Error(ErrorCode::DimensionMismatch, "flag count differs from box size");
  const auto points = box.points();
  std::optional<GridPoint> best;
  std::size_t bestVolume = 0;
  for (const auto& onset : points) {
    const GridBox tail(onset, box.hi());
    const auto volume = tail.size();
    if (volume <= bestVolume) continue;
    bool ok = true;
    for (const auto& p : tail.points()) {
      if (!good[box.indexOf(p)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = onset;
      bestVolume = volume;
    }
  }
  return best;
}

std::string toString(const GridPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string toString(const GridBox& box) { return toString(box.lo()) + ".." + toString(box.hi()); }

}  // namespace vnum
