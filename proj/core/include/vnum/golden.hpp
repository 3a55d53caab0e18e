#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vnum/asymptotics.hpp"

namespace vnum {

struct ClaimResult {
  std::string claim;
  bool pass = false;
  /// First failing point and the observed value, or a summary on success.
  std::string detail;
};

/// An envelope fit produced while checking a suite, kept for the
/// slope-alphabet property.
struct GoldenFit {
  std::string label;
  ModulePattern pattern;
  MinLinearModel model;
};

struct GoldenReport {
  std::string suite;
  std::string description;
  std::vector<ClaimResult> claims;
  std::vector<GoldenFit> fits;

  bool passed() const;
};

struct GoldenOptions {
  unsigned jobs = 1;
};

struct GoldenSuite {
  std::string name;
  std::string description;
  std::function<GoldenReport(const GoldenOptions&)> run;
};

/// Closed-form reference values for four two-ideal families: linear v next to
/// non-linear regularity in K[x,y]; a finite-length module over K[x,y]/(xy)
/// where v is a minimum of two planes; a three-prime module over
/// K[x,y,z]/(xy) with distinct local v-numbers; and a four-prime family in
/// K[x,y,z] whose successive quotients share Ass and local v-numbers with the
/// plain quotients.
const std::vector<GoldenSuite>& goldenSuites();

std::vector<GoldenReport> runGoldenSuites(const GoldenOptions& options = {});

}  // namespace vnum
