#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnum/ass.hpp"
#include "vnum/ext_degree.hpp"
#include "vnum/grid.hpp"
#include "vnum/pattern.hpp"
#include "vnum/prime.hpp"

namespace vnum {

enum class InvariantKind { V, VLocal, Indeg, Reg };

struct Invariant {
  InvariantKind kind = InvariantKind::V;
  std::optional<MonomialPrime> prime;  // VLocal only

  static Invariant v() { return {InvariantKind::V, std::nullopt}; }
  static Invariant local(MonomialPrime p) { return {InvariantKind::VLocal, std::move(p)}; }
  static Invariant indeg() { return {InvariantKind::Indeg, std::nullopt}; }
  static Invariant reg() { return {InvariantKind::Reg, std::nullopt}; }
};

/// `v`, `v local (x,z)`, `indeg`, `reg`.
std::string describe(const Invariant& inv);

/// v_p is +inf at points where p is not associated. reg requires a cyclic
/// finite-length module.
ExtDegree evaluateInvariant(const Invariant& inv, const Subquotient& s);

struct SurveyCell {
  ExtDegree value;
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
};

struct SurveyTable {
  std::string pattern;
  std::string invariant;
  GridBox box;
  std::vector<SurveyCell> cells;  // lexicographic grid order

  const SurveyCell& at(const GridPoint& p) const { return cells.at(box.indexOf(p)); }
  bool hasErrors() const;
};

struct SurveyOptions {
  unsigned jobs = 1;
};

/// Evaluates the invariant at every point of the box. Per-point failures are
/// recorded in their cell.
SurveyTable surveyFunction(const ModulePattern& pattern, const Invariant& inv, const GridBox& box,
                           const SurveyOptions& options = {});

/// Header `n1,...,nr,value`; infinity is the literal `inf`, errors `error`.
std::string toCsv(const SurveyTable& table);
std::string toJson(const SurveyTable& table);

struct LinearForm {
  std::vector<std::int64_t> slopes;
  std::int64_t constant = 0;

  std::int64_t eval(const GridPoint& n) const;
  auto operator<=>(const LinearForm&) const = default;
};

std::string toString(const LinearForm& f);

/// Candidate slope values per coordinate.
using SlopeAlphabet = std::vector<std::vector<std::int64_t>>;

/// Generator degrees of each ideal of the family.
SlopeAlphabet defaultAlphabet(const ModulePattern& pattern);

enum class FitVerdict {
  Exact,               // min of planes reproduces the tail data
  NoExactFit,          // the alphabet admits no exact envelope; see residual
  EventuallyInfinite,  // all tail values are +inf
  NotYetStable,        // tail mixes finite and +inf values
  InvalidData,         // tail contains per-point errors
};

const char* fitVerdictName(FitVerdict v);

struct MinLinearModel {
  std::vector<LinearForm> planes;
  GridBox tail;
  SlopeAlphabet slope_alphabet;
  FitVerdict verdict = FitVerdict::InvalidData;
  /// Largest gap between the candidate envelope and the data on the tail
  /// (0 for exact fits).
  std::int64_t residual = 0;

  std::int64_t evaluate(const GridPoint& n) const;
};

struct FitOptions {
  double tail_fraction = 0.5;
};

/// Fits min_k (w_k . n + c_k) with every w_k drawn from the alphabet product.
/// For each slope vector the tightest constant keeping the plane weakly above
/// the data is used; an exact envelope is pruned to a minimum-cardinality set
/// of planes (lexicographically smallest among those).
MinLinearModel fitMinLinearEnvelope(const SurveyTable& table, const SlopeAlphabet& alphabet,
                                    const GridBox& tail);
MinLinearModel fitMinLinearEnvelope(const SurveyTable& table, const SlopeAlphabet& alphabet,
                                    const FitOptions& options = {});

/// {"planes":[{"w":[..],"c":..}],"tail":{"lo":[..],"hi":[..]},"verdict":"exact",...}
std::string toJson(const MinLinearModel& model);

enum class CheckStatus { Pass, Fail, WindowInsufficient, Skipped };
const char* checkStatusName(CheckStatus s);

struct TheoremReport {
  /// Every plane's slopes lie in the generator-degree sets of the ideals.
  CheckStatus alphabet = CheckStatus::Skipped;
  std::vector<LinearForm> out_of_alphabet;
  /// Single plane with slopes (indeg I_1, ..., indeg I_r), for R/I^n and
  /// I^n/I^{n+1} over a polynomial ring.
  CheckStatus linearity = CheckStatus::Skipped;
  std::vector<std::int64_t> expected_slopes;
  std::int64_t residual = 0;
  std::string note;
};

TheoremReport verifyTheoremPredictions(const ModulePattern& pattern, const Invariant& inv,
                                       const MinLinearModel& model);

/// Whether every model is an exact single plane with the given slopes.
CheckStatus sharedLeadingSlopes(std::span<const MinLinearModel> models,
                                std::span<const std::int64_t> slopes);

struct CoincidenceOptions {
  unsigned jobs = 1;
  double tail_fraction = 0.5;
  std::int64_t power_search_bound = 8;
  std::int64_t min_side = 3;
};

struct CoincidenceRow {
  std::optional<MonomialPrime> prime;  // nullopt: global v-number
  SurveyTable successive;              // v_p(I^n M / I^{n+1} N) at n
  SurveyTable quotient;                // v_p(M / I^{n+1} N) at n (evaluated at n+1)
  std::vector<bool> agree;
  std::optional<GridPoint> agreement_onset;
  bool agrees_on_tail = false;
};

struct CoincidenceReport {
  bool hypotheses_verified = false;
  std::string hypotheses_note;
  StableAssReport stable;
  GridBox checked_tail;
  /// Ass of the successive quotient at n equals Ass of the quotient at n+1.
  std::vector<bool> ass_agree;
  bool ass_agrees_on_tail = false;
  std::vector<CoincidenceRow> rows;

  bool allAgreeOnTail() const;
};

/// Compares v_p of the successive quotients with v_p of the quotients by the
/// next power, for p in the stable Ass set of the successive quotients.
CoincidenceReport coincidenceCheck(const ModulePattern& pattern, const GridBox& box,
                                   const CoincidenceOptions& options = {});

}  // namespace vnum
