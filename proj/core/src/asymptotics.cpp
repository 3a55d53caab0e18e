#include "vnum/asymptotics.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vnum/error.hpp"
#include "vnum/hilbert.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

using ojson = nlohmann::ordered_json;

std::string describe(const Invariant& inv) {
  switch (inv.kind) {
    case InvariantKind::V: return "v";
    case InvariantKind::VLocal: return "v local " + toString(*inv.prime);
    case InvariantKind::Indeg: return "indeg";
    case InvariantKind::Reg: return "reg";
  }
  return "?";
}

ExtDegree evaluateInvariant(const Invariant& inv, const Subquotient& s) {
  switch (inv.kind) {
    case InvariantKind::V: return globalVNumber(s).value;
    case InvariantKind::VLocal:
      if (!inv.prime) throw Error(ErrorCode::InvalidArgument, "local v-number needs a prime");
      return localVNumberOrInf(s, *inv.prime);
    case InvariantKind::Indeg: return indegQuotient(s).value;
    case InvariantKind::Reg:
      if (!s.isCyclic()) {
        throw Error(ErrorCode::Unsupported, "regularity unsupported: module is not a cyclic quotient R/B");
      }
      return regularityFiniteLength(s.bottom());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown invariant");
}

bool SurveyTable::hasErrors() const {
  return std::any_of(cells.begin(), cells.end(), [](const SurveyCell& c) { return !c.ok(); });
}

namespace {

template <class Fn>
SurveyCell guardedCell(Fn&& fn) {
  SurveyCell cell;
  try {
    cell.value = fn();
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

ojson pointJson(const GridPoint& p) {
  ojson a = ojson::array();
  for (auto v : p) a.push_back(v);
  return a;
}

ojson valueJson(const ExtDegree& v) { return v.isFinite() ? ojson(v.value()) : ojson("inf"); }

}  // namespace

SurveyTable surveyFunction(const ModulePattern& pattern, const Invariant& inv, const GridBox& box,
                           const SurveyOptions& options) {
  if (box.rank() != pattern.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "box rank differs from the number of ideals");
  }
  if (inv.kind == InvariantKind::VLocal && !inv.prime) {
    throw Error(ErrorCode::InvalidArgument, "local v-number survey needs a prime");
  }
  SurveyTable table{describe(pattern), describe(inv), box, {}};
  const auto points = box.points();
  table.cells.resize(points.size());
  parallelFor(points.size(), options.jobs, [&](std::size_t i) {
    table.cells[i] = guardedCell([&] { return evaluateInvariant(inv, instantiate(pattern, points[i])); });
  });
  return table;
}

std::string toCsv(const SurveyTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.box.rank(); ++i) out << 'n' << (i + 1) << ',';
  out << "value\n";
  const auto points = table.box.points();
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (auto v : points[k]) out << v << ',';
    const auto& cell = table.cells[k];
    out << (cell.ok() ? cell.value.toString() : std::string("error")) << '\n';
  }
  return out.str();
}

std::string toJson(const SurveyTable& table) {
  ojson j;
  j["pattern"] = table.pattern;
  j["invariant"] = table.invariant;
  j["box"] = {{"lo", pointJson(table.box.lo())}, {"hi", pointJson(table.box.hi())}};
  ojson rows = ojson::array();
  const auto points = table.box.points();
  for (std::size_t k = 0; k < points.size(); ++k) {
    ojson row;
    row["n"] = pointJson(points[k]);
    const auto& cell = table.cells[k];
    if (cell.ok()) {
      row["value"] = valueJson(cell.value);
    } else {
      row["value"] = nullptr;
      row["error"] = *cell.error;
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::int64_t LinearForm::eval(const GridPoint& n) const {
  if (n.size() != slopes.size()) throw Error(ErrorCode::DimensionMismatch, "linear form rank mismatch");
  std::int64_t v = constant;
  for (std::size_t i = 0; i < n.size(); ++i) v = checkedAdd(v, checkedMul(slopes[i], n[i]));
  return v;
}

std::string toString(const LinearForm& f) {
  std::string out;
  for (std::size_t i = 0; i < f.slopes.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(f.slopes[i]) + "*n" + std::to_string(i + 1);
  }
  if (f.constant >= 0) {
    out += " + " + std::to_string(f.constant);
  } else {
    out += " - " + std::to_string(-f.constant);
  }
  return out;
}

SlopeAlphabet defaultAlphabet(const ModulePattern& pattern) {
  SlopeAlphabet out;
  for (const auto& I : pattern.ideals) out.push_back(I.generatorDegrees());
  return out;
}

const char* fitVerdictName(FitVerdict v) {
  switch (v) {
    case FitVerdict::Exact: return "exact";
    case FitVerdict::NoExactFit: return "no_exact_fit";
    case FitVerdict::EventuallyInfinite: return "eventually_infinite";
    case FitVerdict::NotYetStable: return "not_yet_stable";
    case FitVerdict::InvalidData: return "invalid_data";
  }
  return "?";
}

std::int64_t MinLinearModel::evaluate(const GridPoint& n) const {
  if (planes.empty()) throw Error(ErrorCode::InvalidArgument, "model has no planes");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : planes) best = std::min(best, p.eval(n));
  return best;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool coversAll(const std::vector<const Bits*>& chosen, std::size_t npoints) {
  for (std::size_t i = 0; i < npoints; ++i) {
    const auto word = i / 64, bit = i % 64;
    bool hit = false;
    for (const auto* b : chosen) {
      if (((*b)[word] >> bit) & 1u) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Minimum-cardinality cover of the tail points by the planes' contact sets;
// candidates are lexicographically sorted and combinations are visited in
// lexicographic order, so the first cover found is the canonical one.
std::vector<std::size_t> minimumCover(const std::vector<Bits>& contact, std::size_t npoints) {
  const std::size_t n = contact.size();
  constexpr std::size_t kBudget = 2'000'000;
  std::size_t visited = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<const Bits*> chosen;
      for (auto i : idx) chosen.push_back(&contact[i]);
      if (coversAll(chosen, npoints)) return idx;
      if (++visited > kBudget) goto greedy;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
greedy:
  // Exhaustive search too large: keep everything, then drop planes whose
  // removal leaves a cover (later planes first).
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = n; i-- > 0;) {
    std::vector<std::size_t> without;
    std::vector<const Bits*> chosen;
    for (auto j : all) {
      if (j != i) {
        without.push_back(j);
        chosen.push_back(&contact[j]);
      }
    }
    if (coversAll(chosen, npoints)) all = std::move(without);
  }
  return all;
}

}  // namespace

MinLinearModel fitMinLinearEnvelope(const SurveyTable& table, const SlopeAlphabet& alphabet,
                                    const GridBox& tail) {
  const auto r = table.box.rank();
  if (alphabet.size() != r) throw Error(ErrorCode::DimensionMismatch, "alphabet rank differs from the table rank");
  SlopeAlphabet alpha = alphabet;
  for (auto& a : alpha) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty slope alphabet");
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  if (tail.rank() != r || !table.box.contains(tail.lo()) || !table.box.contains(tail.hi())) {
    throw Error(ErrorCode::InvalidArgument, "tail box is not inside the surveyed box");
  }

  MinLinearModel model;
  model.tail = tail;
  model.slope_alphabet = alpha;

  const auto points = tail.points();
  std::vector<std::int64_t> data(points.size());
  std::size_t infinite = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& cell = table.at(points[k]);
    if (!cell.ok()) {
      model.verdict = FitVerdict::InvalidData;
      return model;
    }
    if (cell.value.isInfinite()) {
      ++infinite;
    } else {
      data[k] = cell.value.value();
    }
  }
  if (infinite == points.size()) {
    model.verdict = FitVerdict::EventuallyInfinite;
    return model;
  }
  if (infinite > 0) {
    model.verdict = FitVerdict::NotYetStable;
    return model;
  }

  // Tightest plane above the data for every slope vector of the alphabet.
  std::vector<LinearForm> planes;
  std::vector<std::size_t> digit(r, 0);
  while (true) {
    LinearForm f;
    for (std::size_t i = 0; i < r; ++i) f.slopes.push_back(alpha[i][digit[i]]);
    std::int64_t c = std::numeric_limits<std::int64_t>::min();
    for (std::size_t k = 0; k < points.size(); ++k) {
      f.constant = 0;
      c = std::max(c, data[k] - f.eval(points[k]));
    }
    f.constant = c;
    planes.push_back(std::move(f));
    std::size_t i = r;
    while (i > 0 && digit[i - 1] + 1 == alpha[i - 1].size()) digit[--i] = 0;
    if (i == 0) break;
    ++digit[i - 1];
  }
  std::sort(planes.begin(), planes.end());

  std::int64_t residual = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::int64_t env = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : planes) env = std::min(env, p.eval(points[k]));
    residual = std::max(residual, env - data[k]);
  }
  model.residual = residual;

  std::vector<LinearForm> active;
  std::vector<Bits> contact;
  const std::size_t words = (points.size() + 63) / 64;
  for (const auto& p : planes) {
    Bits bits(words, 0);
    bool any = false;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (p.eval(points[k]) == data[k]) {
        bits[k / 64] |= std::uint64_t{1} << (k % 64);
        any = true;
      }
    }
    if (any) {
      active.push_back(p);
      contact.push_back(std::move(bits));
    }
  }
  if (residual > 0) {
    model.verdict = FitVerdict::NoExactFit;
    model.planes = std::move(active);
    return model;
  }
  model.verdict = FitVerdict::Exact;
  for (auto i : minimumCover(contact, points.size())) model.planes.push_back(active[i]);
  return model;
}

MinLinearModel fitMinLinearEnvelope(const SurveyTable& table, const SlopeAlphabet& alphabet,
                                    const FitOptions& options) {
  return fitMinLinearEnvelope(table, alphabet, table.box.tail(options.tail_fraction));
}

std::string toJson(const MinLinearModel& model) {
  ojson j;
  ojson planes = ojson::array();
  for (const auto& p : model.planes) {
    ojson plane;
    plane["w"] = pointJson(p.slopes);
    plane["c"] = p.constant;
    planes.push_back(std::move(plane));
  }
  j["planes"] = std::move(planes);
  j["tail"] = {{"lo", pointJson(model.tail.lo())}, {"hi", pointJson(model.tail.hi())}};
  j["verdict"] = fitVerdictName(model.verdict);
  j["residual"] = model.residual;
  ojson alpha = ojson::array();
  for (const auto& a : model.slope_alphabet) alpha.push_back(pointJson(a));
  j["alphabet"] = std::move(alpha);
  return j.dump();
}

const char* checkStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::WindowInsufficient: return "window_insufficient";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

CheckStatus singlePlaneStatus(const MinLinearModel& model, std::span<const std::int64_t> slopes) {
  switch (model.verdict) {
    case FitVerdict::Exact:
      if (model.planes.size() != 1) return CheckStatus::WindowInsufficient;
      return std::equal(slopes.begin(), slopes.end(), model.planes[0].slopes.begin(),
                        model.planes[0].slopes.end())
                 ? CheckStatus::Pass
                 : CheckStatus::Fail;
    case FitVerdict::NoExactFit:
    case FitVerdict::NotYetStable: return CheckStatus::WindowInsufficient;
    case FitVerdict::EventuallyInfinite:
    case FitVerdict::InvalidData: return CheckStatus::Fail;
  }
  return CheckStatus::Fail;
}

}  // namespace

TheoremReport verifyTheoremPredictions(const ModulePattern& pattern, const Invariant& inv,
                                       const MinLinearModel& model) {
  TheoremReport report;
  report.residual = model.residual;
  const auto degrees = defaultAlphabet(pattern);

  if (model.verdict == FitVerdict::Exact) {
    for (const auto& plane : model.planes) {
      bool inside = plane.slopes.size() == degrees.size();
      for (std::size_t i = 0; inside && i < degrees.size(); ++i) {
        inside = std::binary_search(degrees[i].begin(), degrees[i].end(), plane.slopes[i]);
      }
      if (!inside) report.out_of_alphabet.push_back(plane);
    }
    report.alphabet = report.out_of_alphabet.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  } else {
    report.note += "alphabet check skipped: fit is not exact; ";
  }

  const bool polynomialScope = pattern.hasZeroBase() && pattern.hasUnitSubmodule() &&
                               std::all_of(pattern.ideals.begin(), pattern.ideals.end(),
                                           [](const MonomialIdeal& I) { return I.isProper(); });
  const bool kindScope =
      (pattern.kind == PatternKind::QuotientByPower && inv.kind == InvariantKind::V) ||
      (pattern.kind == PatternKind::SuccessivePower &&
       (inv.kind == InvariantKind::V || inv.kind == InvariantKind::Indeg));
  if (!polynomialScope || !kindScope) {
    report.note += "linearity check skipped: needs R/I^n or I^n/I^(n+1) over a polynomial ring "
                   "with global v (or indeg of I^n/I^(n+1))";
    return report;
  }
  for (const auto& I : pattern.ideals) report.expected_slopes.push_back(I.indeg().value());
  report.linearity = singlePlaneStatus(model, report.expected_slopes);
  if (report.linearity == CheckStatus::WindowInsufficient) {
    report.note += "window insufficient: residual " + std::to_string(model.residual) + ", " +
                   std::to_string(model.planes.size()) + " plane(s)";
  }
  return report;
}

CheckStatus sharedLeadingSlopes(std::span<const MinLinearModel> models, std::span<const std::int64_t> slopes) {
  CheckStatus worst = CheckStatus::Pass;
  for (const auto& m : models) {
    const auto s = singlePlaneStatus(m, slopes);
    if (s == CheckStatus::Fail) return s;
    if (s == CheckStatus::WindowInsufficient) worst = s;
  }
  return worst;
}

bool CoincidenceReport::allAgreeOnTail() const {
  return ass_agrees_on_tail &&
         std::all_of(rows.begin(), rows.end(), [](const CoincidenceRow& r) { return r.agrees_on_tail; });
}

CoincidenceReport coincidenceCheck(const ModulePattern& pattern, const GridBox& box,
                                   const CoincidenceOptions& options) {
  if (box.rank() != pattern.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "box rank differs from the number of ideals");
  }
  CoincidenceReport report;

  // (0 :_M I_k) = 0 with M = R/J0 means (J0 : I_k) = J0; I^s M ⊆ N means
  // I^s ⊆ K, and it suffices to try s = t(1,...,1).
  bool annihilatorFree = true;
  for (std::size_t k = 0; k < pattern.rank(); ++k) {
    if (!(colon(pattern.base, pattern.ideals[k]) == pattern.base)) {
      annihilatorFree = false;
      report.hypotheses_note += "(0 :_M I_" + std::to_string(k + 1) + ") != 0; ";
    }
  }
  std::optional<std::int64_t> power;
  for (std::int64_t t = 0; t <= options.power_search_bound && !power; ++t) {
    const std::vector<std::int64_t> s(pattern.rank(), t);
    if (multiPower(pattern.ideals, s).isSubsetOf(pattern.submodule)) power = t;
  }
  if (power) {
    report.hypotheses_note += "I^s M ⊆ N at s = " + std::to_string(*power) + "*(1,...,1)";
  } else {
    report.hypotheses_note +=
        "no s <= " + std::to_string(options.power_search_bound) + "*(1,...,1) with I^s M ⊆ N";
  }
  report.hypotheses_verified = annihilatorFree && power.has_value();

  const auto successive = pattern.withKind(PatternKind::SuccessivePower);
  const auto quotient = pattern.withKind(PatternKind::QuotientByPower);
  report.stable = stableAssWindow(successive, box, {options.min_side, options.jobs});
  report.checked_tail = box.tail(options.tail_fraction);

  const auto& primes = report.stable.stable_set.primes();
  const auto points = box.points();
  GridPoint shiftedLo = box.lo(), shiftedHi = box.hi();
  for (auto& v : shiftedLo) ++v;
  for (auto& v : shiftedHi) ++v;
  const GridBox shifted(shiftedLo, shiftedHi);

  // Per point: [global, p_1, ..., p_k] for both modules, plus Ass equality.
  const std::size_t width = primes.size() + 1;
  std::vector<SurveyCell> succCells(points.size() * width), quotCells(points.size() * width);
  std::vector<char> assEqual(points.size(), 0);
  parallelFor(points.size(), options.jobs, [&](std::size_t i) {
    auto next = points[i];
    for (auto& v : next) ++v;
    auto evalAll = [&](const Subquotient& s, SurveyCell* out) -> std::optional<AssSet> {
      std::optional<AssSet> ass;
      try {
        if (!s.isZero()) ass = assSubquotient(s);
      } catch (const std::exception& e) {
        for (std::size_t c = 0; c < width; ++c) out[c].error = e.what();
        return std::nullopt;
      }
      out[0] = guardedCell([&] { return globalVNumber(s).value; });
      for (std::size_t c = 0; c < primes.size(); ++c) {
        out[c + 1] = guardedCell([&]() -> ExtDegree {
          if (!ass || !ass->contains(primes[c])) return ExtDegree::infinity();
          return localVNumber(s, primes[c], *ass).value;
        });
      }
      return ass ? ass : std::optional<AssSet>(AssSet{});
    };
    const auto a = evalAll(instantiate(successive, points[i]), &succCells[i * width]);
    const auto b = evalAll(instantiate(quotient, next), &quotCells[i * width]);
    assEqual[i] = a && b && *a == *b;
  });

  std::vector<bool> assGood(assEqual.begin(), assEqual.end());
  report.ass_agree = assGood;
  report.ass_agrees_on_tail = true;
  for (const auto& p : report.checked_tail.points()) {
    report.ass_agrees_on_tail = report.ass_agrees_on_tail && assGood[box.indexOf(p)];
  }

  for (std::size_t c = 0; c < width; ++c) {
    CoincidenceRow row;
    const auto inv = c == 0 ? Invariant::v() : Invariant::local(primes[c - 1]);
    if (c > 0) row.prime = primes[c - 1];
    row.successive = SurveyTable{describe(successive), describe(inv), box, {}};
    row.quotient = SurveyTable{describe(quotient), describe(inv), shifted, {}};
    row.agree.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& s = succCells[i * width + c];
      const auto& q = quotCells[i * width + c];
      row.successive.cells.push_back(s);
      row.quotient.cells.push_back(q);
      row.agree[i] = s.ok() && q.ok() && s.value == q.value;
    }
    row.agreement_onset = largestGoodTail(box, row.agree);
    row.agrees_on_tail = true;
    for (const auto& p : report.checked_tail.points()) {
      row.agrees_on_tail = row.agrees_on_tail && row.agree[box.indexOf(p)];
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace vnum
