#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vnum/ext_degree.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

struct StaircaseReport {
  std::uint64_t standard_count = 0;
  ExtDegree end;
  std::map<std::int64_t, std::uint64_t> hilbert;
  std::vector<Monomial> standard;
};

/// R/B has finite length iff B contains a pure power of every variable.
bool isFiniteLength(const MonomialIdeal& b);

/// Standard monomials of a finite-length quotient, enumerated in the box
/// prod [0, a_i) where x_i^{a_i} is the pure power in B. Throws Unsupported
/// otherwise.
StaircaseReport staircase(const MonomialIdeal& b);

/// reg(R/B) = end(R/B) for finite-length quotients; throws Unsupported
/// otherwise.
ExtDegree regularityFiniteLength(const MonomialIdeal& b);

/// CSV rows `degree,count` with a header line.
std::string hilbertCsv(const StaircaseReport& report);

}  // namespace vnum
