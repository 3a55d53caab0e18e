#include "vnum/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "vnum/error.hpp"

namespace vnum {

namespace {

// Smallest a_i with x_i^{a_i} in B, or 0 when no pure power of x_i exists.
std::vector<std::int64_t> purePowerBounds(const MonomialIdeal& b) {
  const auto d = b.ring()->dim();
  std::vector<std::int64_t> bound(d, 0);
  for (const auto& g : b.gens()) {
    const auto supp = g.support();
    if (__builtin_popcount(supp) != 1) continue;
    const auto i = static_cast<std::size_t>(__builtin_ctz(supp));
    bound[i] = bound[i] == 0 ? g[i] : std::min(bound[i], g[i]);
  }
  return bound;
}

}  // namespace

bool isFiniteLength(const MonomialIdeal& b) {
  if (b.isUnit()) return true;
  const auto bound = purePowerBounds(b);
  return std::all_of(bound.begin(), bound.end(), [](std::int64_t a) { return a > 0; });
}

StaircaseReport staircase(const MonomialIdeal& b) {
  if (b.isUnit()) throw Error(ErrorCode::EmptyModule, "staircase of R/R");
  if (!isFiniteLength(b)) {
    throw Error(ErrorCode::Unsupported, "R/B does not have finite length: " + toString(b));
  }
  const auto& ring = *b.ring();
  const auto bound = purePowerBounds(b);
  StaircaseReport report;
  Monomial cur(ring.dim());
  // Odometer over the box prod [0, a_i).
  while (true) {
    if (!b.contains(cur)) {
      const auto deg = degree(ring, cur);
      ++report.standard_count;
      ++report.hilbert[deg];
      report.standard.push_back(cur);
    }
    std::size_t i = 0;
    for (; i < ring.dim(); ++i) {
      if (cur[i] + 1 < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == ring.dim()) break;
  }
  std::sort(report.standard.begin(), report.standard.end(),
            [&](const Monomial& x, const Monomial& y) { return canonicalLess(ring, x, y); });
  report.end = report.hilbert.rbegin()->first;
  return report;
}

ExtDegree regularityFiniteLength(const MonomialIdeal& b) {
  if (!b.isUnit() && !isFiniteLength(b)) {
    throw Error(ErrorCode::Unsupported,
                "regularity unsupported: R/B is not of finite length for B = " + toString(b));
  }
  return staircase(b).end;
}

std::string hilbertCsv(const StaircaseReport& report) {
  std::ostringstream out;
  out << "degree,count\n";
  for (const auto& [deg, count] : report.hilbert) out << deg << ',' << count << '\n';
  return out.str();
}

}  // namespace vnum
