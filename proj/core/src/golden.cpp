#include "vnum/golden.hpp"

#include <algorithm>

#include "vnum/ass.hpp"
#include "vnum/hilbert.hpp"
#include "vnum/text.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

bool GoldenReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

namespace {

struct PointData {
  AssSet ass;
  ExtDegree v;
  std::vector<std::pair<MonomialPrime, ExtDegree>> local;
  ExtDegree reg;
  std::optional<MonomialIdeal> bottom;

  ExtDegree localAt(const MonomialPrime& p) const {
    for (const auto& [q, val] : local) {
      if (q == p) return val;
    }
    return ExtDegree::infinity();
  }
};

PointData analyze(const Subquotient& s, bool withReg) {
  PointData d{{}, {}, {}, {}, s.bottom()};
  if (s.isZero()) return d;
  d.ass = assSubquotient(s);
  for (const auto& p : d.ass.primes()) {
    const auto r = localVNumber(s, p, d.ass);
    d.local.emplace_back(p, r.value);
    d.v = std::min(d.v, r.value);
  }
  if (withReg) d.reg = regularityFiniteLength(s.bottom());
  return d;
}

/// Data at every point n of `box` for the module of `pattern` at n + shift.
std::vector<PointData> analyzeGrid(const ModulePattern& pattern, const GridBox& box, std::int64_t shift,
                                   bool withReg, unsigned jobs) {
  const auto points = box.points();
  std::vector<PointData> out(points.size());
  parallelFor(points.size(), jobs, [&](std::size_t i) {
    auto n = points[i];
    for (auto& v : n) v += shift;
    out[i] = analyze(instantiate(pattern, n), withReg);
  });
  return out;
}

using Check = std::function<std::optional<std::string>(const GridPoint&, std::size_t)>;

ClaimResult gridClaim(std::string claim, const GridBox& box, const Check& check) {
  const auto points = box.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (auto bad = check(points[i], i)) {
      return {std::move(claim), false, "fails at " + toString(points[i]) + ": " + *bad};
    }
  }
  return {std::move(claim), true, "holds on " + toString(box)};
}

std::optional<std::string> expectEq(const ExtDegree& got, const ExtDegree& want) {
  if (got == want) return std::nullopt;
  return "got " + got.toString() + ", expected " + want.toString();
}

std::string assString(const AssSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + toString(a.primes()[i]);
  return s + "}";
}

std::optional<std::string> expectAss(const AssSet& got, const AssSet& want) {
  if (got == want) return std::nullopt;
  return "got " + assString(got) + ", expected " + assString(want);
}

SurveyTable tableOf(const ModulePattern& pattern, const Invariant& inv, const GridBox& box,
                    const std::vector<PointData>& data) {
  SurveyTable t{describe(pattern), describe(inv), box, {}};
  for (const auto& d : data) {
    SurveyCell cell;
    cell.value = inv.kind == InvariantKind::V ? d.v : d.localAt(*inv.prime);
    t.cells.push_back(cell);
  }
  return t;
}

std::string planesString(const std::vector<LinearForm>& planes) {
  std::string s;
  for (std::size_t i = 0; i < planes.size(); ++i) s += (i ? "; " : "") + toString(planes[i]);
  return s.empty() ? "none" : s;
}

/// Fits the table on the whole box and records the fit; the claim is that the
/// fit is exact with exactly `expected` as planes, each touching the data.
ClaimResult fitClaim(std::string claim, const std::string& label, const ModulePattern& pattern,
                     const SurveyTable& table, std::vector<LinearForm> expected, GoldenReport& report) {
  auto model = fitMinLinearEnvelope(table, defaultAlphabet(pattern), table.box);
  std::sort(expected.begin(), expected.end());
  bool ok = model.verdict == FitVerdict::Exact && model.planes == expected;
  if (ok) {
    for (const auto& plane : model.planes) {
      bool touches = false;
      for (const auto& n : model.tail.points()) touches = touches || plane.eval(n) == table.at(n).value.value();
      ok = ok && touches;
    }
  }
  std::string detail = std::string(fitVerdictName(model.verdict)) + " fit: " + planesString(model.planes);
  report.fits.push_back({label, pattern, std::move(model)});
  return {std::move(claim), ok, std::move(detail)};
}

/// Records an exploratory fit without making a claim about its planes.
void recordFit(const std::string& label, const ModulePattern& pattern, const SurveyTable& table,
               GoldenReport& report) {
  report.fits.push_back({label, pattern, fitMinLinearEnvelope(table, defaultAlphabet(pattern), table.box)});
}

MonomialPrime prime(const RingPtr& ring, std::initializer_list<std::size_t> vars) {
  return MonomialPrime::fromIndices(ring, std::vector<std::size_t>(vars));
}

GoldenReport linearVNonlinearReg(const GoldenOptions& options) {
  GoldenReport report{"linear_v_nonlinear_reg", "K[x,y], I = (x, y^2), J = (x^2, y)", {}, {}};
  const auto ring = RingSpec::standard({"x", "y"});
  const auto pattern =
      ModulePattern::simple(PatternKind::QuotientByPower, {parseIdeal(ring, "(x, y^2)"), parseIdeal(ring, "(x^2, y)")});
  const auto box = GridBox::cube(2, 1, 6);
  const auto data = analyzeGrid(pattern, box, 0, true, options.jobs);
  const auto m = MonomialPrime::maximal(ring);

  report.claims.push_back(gridClaim("Ass(R/I^mJ^n) = {(x,y)}", box, [&](const GridPoint&, std::size_t i) {
    return expectAss(data[i].ass, AssSet({m}));
  }));
  report.claims.push_back(gridClaim("v(R/I^mJ^n) = m+n", box, [&](const GridPoint& n, std::size_t i) {
    return expectEq(data[i].v, n[0] + n[1]);
  }));
  report.claims.push_back(gridClaim("v_(x,y)(R/I^mJ^n) = m+n", box, [&](const GridPoint& n, std::size_t i) {
    return expectEq(data[i].localAt(m), n[0] + n[1]);
  }));
  report.claims.push_back(
      gridClaim("reg(R/I^mJ^n) = max{m+2n-1, 2m+n-1}", box, [&](const GridPoint& n, std::size_t i) {
        return expectEq(data[i].reg, std::max(n[0] + 2 * n[1] - 1, 2 * n[0] + n[1] - 1));
      }));
  report.claims.push_back(fitClaim("v fits the single plane m+n", "v", pattern,
                                   tableOf(pattern, Invariant::v(), box, data), {{{1, 1}, 0}}, report));
  return report;
}

GoldenReport crossingLinesModule(const GoldenOptions& options) {
  GoldenReport report{"crossing_lines_min_of_two_planes", "K[x,y]/(xy), I = (x, y^2), J = (x^2, y)", {}, {}};
  const auto ring = RingSpec::standard({"x", "y"});
  const auto base = parseIdeal(ring, "(x*y)");
  const auto I = parseIdeal(ring, "(x, y^2)");
  const auto J = parseIdeal(ring, "(x^2, y)");
  const auto pattern =
      ModulePattern::make(PatternKind::QuotientByPower, base, {I, J}, MonomialIdeal::unit(ring));
  const auto successive = pattern.withKind(PatternKind::SuccessivePower);
  const auto box = GridBox::cube(2, 1, 5);
  const auto data = analyzeGrid(pattern, box, 0, true, options.jobs);
  const auto prev = analyzeGrid(successive, box, -1, false, options.jobs);
  const auto m = MonomialPrime::maximal(ring);

  const bool regular = colon(base, I) == base && colon(base, J) == base;
  report.claims.push_back({"(0 :_R I) = 0 and (0 :_R J) = 0", regular, regular ? "holds" : "fails"});
  report.claims.push_back(
      gridClaim("I^mJ^n + (xy) = (x^{m+2n}, y^{2m+n}, xy)", box, [&](const GridPoint& n, std::size_t i) {
        const auto want = MonomialIdeal::minimalize(
            ring, {Monomial{n[0] + 2 * n[1], 0}, Monomial{0, 2 * n[0] + n[1]}, Monomial{1, 1}});
        const bool same = *data[i].bottom == want && data[i].bottom->numGens() == 3;
        return same ? std::nullopt : std::optional<std::string>("got " + toString(*data[i].bottom));
      }));
  report.claims.push_back(
      gridClaim("Ass(R/I^mJ^n) = {(x,y)} = Ass(I^{m-1}J^{n-1}/I^mJ^n)", box, [&](const GridPoint&, std::size_t i) {
        if (auto bad = expectAss(data[i].ass, AssSet({m}))) return bad;
        return expectAss(prev[i].ass, AssSet({m}));
      }));
  report.claims.push_back(
      gridClaim("v(R/I^mJ^n) = min{m+2n-1, 2m+n-1}", box, [&](const GridPoint& n, std::size_t i) {
        return expectEq(data[i].v, std::min(n[0] + 2 * n[1] - 1, 2 * n[0] + n[1] - 1));
      }));
  report.claims.push_back(
      gridClaim("reg(R/I^mJ^n) = max{m+2n-1, 2m+n-1}", box, [&](const GridPoint& n, std::size_t i) {
        return expectEq(data[i].reg, std::max(n[0] + 2 * n[1] - 1, 2 * n[0] + n[1] - 1));
      }));
  report.claims.push_back(
      gridClaim("v(I^{m-1}J^{n-1}/I^mJ^n) = v(R/I^mJ^n)", box,
                [&](const GridPoint&, std::size_t i) { return expectEq(prev[i].v, data[i].v); }));
  report.claims.push_back(fitClaim("v fits min{m+2n-1, 2m+n-1}", "v", pattern,
                                   tableOf(pattern, Invariant::v(), box, data),
                                   {{{1, 2}, -1}, {{2, 1}, -1}}, report));
  return report;
}

GoldenReport threePrimeModule(const GoldenOptions& options) {
  GoldenReport report{"three_prime_module", "M = K[x,y,z]/(xy), I = (x, z^2), J = (y, z^3)", {}, {}};
  const auto ring = RingSpec::standard({"x", "y", "z"});
  const auto base = parseIdeal(ring, "(x*y)");
  const auto I = parseIdeal(ring, "(x, z^2)");
  const auto J = parseIdeal(ring, "(y, z^3)");
  const auto pattern =
      ModulePattern::make(PatternKind::QuotientByPower, base, {I, J}, MonomialIdeal::unit(ring));
  const auto box = GridBox::cube(2, 1, 5);
  const auto data = analyzeGrid(pattern, box, 0, false, options.jobs);
  const auto p = prime(ring, {0, 2});
  const auto q = prime(ring, {1, 2});
  const auto m = MonomialPrime::maximal(ring);

  const bool regular = colon(base, I) == base && colon(base, J) == base;
  report.claims.push_back({"(0 :_M I) = 0 and (0 :_M J) = 0", regular, regular ? "holds" : "fails"});
  report.claims.push_back(gridClaim("Ass(M/I^mJ^nM) = {(x,z), (y,z), (x,y,z)}", box,
                                    [&](const GridPoint&, std::size_t i) {
                                      return expectAss(data[i].ass, AssSet({p, q, m}));
                                    }));
  report.claims.push_back(
      gridClaim("v_(x,y,z)(M/I^mJ^nM) = min{2m+n+1, m+3n}", box, [&](const GridPoint& n, std::size_t i) {
        return expectEq(data[i].localAt(m), std::min(2 * n[0] + n[1] + 1, n[0] + 3 * n[1]));
      }));
  report.claims.push_back(gridClaim("v_(x,z)(M/I^mJ^nM) = 2m+n-1", box, [&](const GridPoint& n, std::size_t i) {
    return expectEq(data[i].localAt(p), 2 * n[0] + n[1] - 1);
  }));
  report.claims.push_back(gridClaim("v_(y,z)(M/I^mJ^nM) = m+3n-1", box, [&](const GridPoint& n, std::size_t i) {
    return expectEq(data[i].localAt(q), n[0] + 3 * n[1] - 1);
  }));
  report.claims.push_back(
      gridClaim("v(M/I^mJ^nM) = min{2m+n-1, m+3n-1}", box, [&](const GridPoint& n, std::size_t i) {
        return expectEq(data[i].v, std::min(2 * n[0] + n[1] - 1, n[0] + 3 * n[1] - 1));
      }));
  report.claims.push_back(fitClaim("v fits min{2m+n-1, m+3n-1} with both planes active", "v", pattern,
                                   tableOf(pattern, Invariant::v(), box, data),
                                   {{{2, 1}, -1}, {{1, 3}, -1}}, report));
  report.claims.push_back(fitClaim("v_(x,y,z) fits min{2m+n+1, m+3n}", "v local (x,y,z)", pattern,
                                   tableOf(pattern, Invariant::local(m), box, data),
                                   {{{2, 1}, 1}, {{1, 3}, 0}}, report));
  recordFit("v local (x,z)", pattern, tableOf(pattern, Invariant::local(p), box, data), report);
  recordFit("v local (y,z)", pattern, tableOf(pattern, Invariant::local(q), box, data), report);
  return report;
}

GoldenReport fourPrimeCoincidence(const GoldenOptions& options) {
  GoldenReport report{"four_prime_coincidence", "K[x,y,z], I = (x^2, y*z^2), J = (y^2, x*z^2)", {}, {}};
  const auto ring = RingSpec::standard({"x", "y", "z"});
  const auto pattern = ModulePattern::simple(PatternKind::QuotientByPower,
                                             {parseIdeal(ring, "(x^2, y*z^2)"), parseIdeal(ring, "(y^2, x*z^2)")});
  const auto successive = pattern.withKind(PatternKind::SuccessivePower);
  const auto box = GridBox::cube(2, 1, 5);
  const auto data = analyzeGrid(pattern, box, 0, false, options.jobs);
  const auto prev = analyzeGrid(successive, box, -1, false, options.jobs);
  const auto p = prime(ring, {0, 1});
  const auto q = prime(ring, {0, 2});
  const auto r = prime(ring, {1, 2});
  const auto m = MonomialPrime::maximal(ring);
  const AssSet all({p, q, r, m});

  report.claims.push_back(gridClaim("Ass(R/I^mJ^n) = {(x,y), (x,z), (y,z), (x,y,z)}", box,
                                    [&](const GridPoint&, std::size_t i) { return expectAss(data[i].ass, all); }));
  report.claims.push_back(gridClaim("v_(x,y,z)(R/I^mJ^n) = 2m+2n+2", box, [&](const GridPoint& n, std::size_t i) {
    return expectEq(data[i].localAt(m), 2 * n[0] + 2 * n[1] + 2);
  }));
  report.claims.push_back(
      gridClaim("v_(x,y)(R/I^mJ^n) = min{3m+2n+1, 2m+3n+1}", box, [&](const GridPoint& n, std::size_t i) {
        return expectEq(data[i].localAt(p), std::min(3 * n[0] + 2 * n[1] + 1, 2 * n[0] + 3 * n[1] + 1));
      }));
  report.claims.push_back(gridClaim("v = v_(x,z) = v_(y,z) = 2m+2n+1", box, [&](const GridPoint& n, std::size_t i) {
    const ExtDegree want = 2 * n[0] + 2 * n[1] + 1;
    if (auto bad = expectEq(data[i].v, want)) return bad;
    if (auto bad = expectEq(data[i].localAt(q), want)) return bad;
    return expectEq(data[i].localAt(r), want);
  }));
  report.claims.push_back(gridClaim("Ass(I^{m-1}J^{n-1}/I^mJ^n) = Ass(R/I^mJ^n)", box,
                                    [&](const GridPoint&, std::size_t i) { return expectAss(prev[i].ass, all); }));
  report.claims.push_back(gridClaim(
      "local and global v-numbers of I^{m-1}J^{n-1}/I^mJ^n equal those of R/I^mJ^n", box,
      [&](const GridPoint&, std::size_t i) -> std::optional<std::string> {
        if (auto bad = expectEq(prev[i].v, data[i].v)) return "global: " + *bad;
        for (const auto& pr : all.primes()) {
          if (auto bad = expectEq(prev[i].localAt(pr), data[i].localAt(pr))) return toString(pr) + ": " + *bad;
        }
        return std::nullopt;
      }));
  report.claims.push_back(fitClaim("v fits the single plane 2m+2n+1", "v", pattern,
                                   tableOf(pattern, Invariant::v(), box, data), {{{2, 2}, 1}}, report));
  report.claims.push_back(fitClaim("v_(x,y) fits min{3m+2n+1, 2m+3n+1}", "v local (x,y)", pattern,
                                   tableOf(pattern, Invariant::local(p), box, data),
                                   {{{3, 2}, 1}, {{2, 3}, 1}}, report));
  recordFit("v local (x,z)", pattern, tableOf(pattern, Invariant::local(q), box, data), report);
  recordFit("v local (y,z)", pattern, tableOf(pattern, Invariant::local(r), box, data), report);
  recordFit("v local (x,y,z)", pattern, tableOf(pattern, Invariant::local(m), box, data), report);
  return report;
}

}  // namespace

const std::vector<GoldenSuite>& goldenSuites() {
  static const std::vector<GoldenSuite> suites = {
      {"linear_v_nonlinear_reg", "linear v next to piecewise regularity in two variables", linearVNonlinearReg},
      {"crossing_lines_min_of_two_planes", "v is a minimum of two planes over K[x,y]/(xy)", crossingLinesModule},
      {"three_prime_module", "distinct local v-numbers over K[x,y,z]/(xy)", threePrimeModule},
      {"four_prime_coincidence", "successive quotients share Ass and local v-numbers", fourPrimeCoincidence},
  };
  return suites;
}

std::vector<GoldenReport> runGoldenSuites(const GoldenOptions& options) {
  std::vector<GoldenReport> out;
  for (const auto& s : goldenSuites()) out.push_back(s.run(options));
  return out;
}

}  // namespace vnum
