#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "vnum/ass.hpp"
#include "vnum/error.hpp"
#include "vnum/golden.hpp"
#include "vnum/hilbert.hpp"
#include "vnum/session.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

namespace {

using ojson = nlohmann::ordered_json;

struct Fatal {
  std::string message;
};

ojson pointJson(const GridPoint& p) {
  ojson a = ojson::array();
  for (auto v : p) a.push_back(v);
  return a;
}

ojson valueJson(const ExtDegree& v) { return v.isFinite() ? ojson(v.value()) : ojson("inf"); }

std::string assText(const AssSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + toString(a.primes()[i]);
  return s + "}";
}

class Executor {
 public:
  explicit Executor(const ExecConfig& config) : config_(config) {}

  ExecResult run(const SessionAst& ast) {
    ExecResult result;
    for (std::size_t k = 0; k < ast.statements.size(); ++k) {
      const auto& st = ast.statements[k];
      line_ = st.pos.line;
      index_ = k + 1;
      try {
        std::visit([&](const auto& node) { handle(node); }, st.node);
      } catch (const Fatal& f) {
        errors_ << "line " << line_ << ": fatal: " << f.message << '\n';
        exit_ = 1;
        break;
      } catch (const std::exception& e) {
        errors_ << "line " << line_ << ": fatal: " << e.what() << '\n';
        exit_ = 1;
        break;
      }
    }
    result.exit_code = exit_;
    result.output = out_.str();
    result.errors = errors_.str();
    return result;
  }

 private:
  bool json() const { return config_.format == OutputFormat::Json; }

  void pointError(const std::string& message) {
    errors_ << "line " << line_ << ": error: " << message << '\n';
    if (exit_ == 0) exit_ = 2;
  }

  void emit(const ojson& j) { out_ << j.dump() << '\n'; }

  void writeArtifact(const std::string& stem, const std::string& ext, const std::string& content) {
    if (config_.out_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(config_.out_dir, ec);
    const auto path = std::filesystem::path(config_.out_dir) / (stem + "_" + std::to_string(index_) + "." + ext);
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) throw Fatal{"cannot write artifact " + path.string()};
  }

  // ---- declarations ----
  void handle(const RingDecl& d) { ring_ = RingSpec::make(d.vars, d.weights); }

  MonomialIdeal literal(const IdealLiteral& lit) const {
    if (lit.zero) return MonomialIdeal::zero(ring_);
    std::vector<Monomial> gens;
    for (const auto& m : lit.gens) {
      Monomial mono(ring_->dim());
      for (const auto& [var, e] : m.factors) {
        const auto i = *ring_->indexOf(var);
        mono[i] = checkedAdd(mono[i], e);
      }
      gens.push_back(mono);
    }
    return MonomialIdeal::minimalize(ring_, std::move(gens));
  }

  MonomialIdeal resolve(const IdealRef& r) const {
    switch (r.kind) {
      case IdealRef::Kind::Name: return ideals_.at(r.name);
      case IdealRef::Kind::Zero: return MonomialIdeal::zero(ring_);
      case IdealRef::Kind::Unit: return MonomialIdeal::unit(ring_);
      case IdealRef::Kind::Literal: return literal(r.literal);
    }
    throw Fatal{"bad ideal reference"};
  }

  ModulePattern resolve(const PatternExpr& p) const {
    if (p.name) return patterns_.at(*p.name);
    std::vector<MonomialIdeal> powers;
    for (const auto& r : p.powers) powers.push_back(resolve(r));
    try {
      return ModulePattern::make(p.kind, resolve(p.base), std::move(powers), resolve(p.sub));
    } catch (const Error& e) {
      throw Fatal{std::string("invalid pattern: ") + e.what()};
    }
  }

  MonomialPrime prime(const std::vector<std::string>& vars) const {
    std::vector<std::size_t> idx;
    for (const auto& v : vars) idx.push_back(*ring_->indexOf(v));
    return MonomialPrime::fromIndices(ring_, idx);
  }

  Invariant invariant(const InvariantAst& inv) const {
    switch (inv.kind) {
      case InvariantKind::V: return Invariant::v();
      case InvariantKind::VLocal: return Invariant::local(prime(inv.prime));
      case InvariantKind::Indeg: return Invariant::indeg();
      case InvariantKind::Reg: return Invariant::reg();
    }
    return Invariant::v();
  }

  void handle(const IdealDecl& d) { ideals_.emplace(d.name, literal(d.value)); }
  void handle(const PatternDecl& d) { patterns_.emplace(d.name, resolve(d.value)); }

  // ---- commands ----
  void handle(const Command& c) {
    if (c.kind == CommandKind::CheckExamples) {
      checkExamples();
      return;
    }
    const auto pattern = resolve(c.pattern);
    switch (c.kind) {
      case CommandKind::Ass:
      case CommandKind::VNumber:
      case CommandKind::Indeg:
      case CommandKind::Reg:
      case CommandKind::Hilbert: pointCommand(c, pattern); break;
      case CommandKind::StableAss: stableAss(c, pattern); break;
      case CommandKind::Survey: survey(c, pattern); break;
      case CommandKind::Fit: fit(c, pattern); break;
      case CommandKind::Coincide: coincide(c, pattern); break;
      case CommandKind::CheckExamples: break;
    }
  }

  void pointCommand(const Command& c, const ModulePattern& pattern) {
    std::string head = commandKeyword(c.kind);
    std::optional<MonomialPrime> local;
    if (c.local) {
      local = prime(*c.local);
      head += " local " + toString(*local);
    }
    head += " of " + describe(pattern) + " at " + toString(c.at);
    ojson j;
    j["command"] = commandKeyword(c.kind);
    j["pattern"] = describe(pattern);
    j["at"] = pointJson(c.at);
    std::string text;
    try {
      const auto s = instantiate(pattern, c.at);
      switch (c.kind) {
        case CommandKind::Ass: {
          const auto ass = s.isZero() ? AssSet{} : assSubquotient(s);
          text = assText(ass);
          j["ass"] = ojson::parse(toJson(ass));
          break;
        }
        case CommandKind::VNumber: {
          VNumberResult r;
          if (local) {
            const auto ass = s.isZero() ? AssSet{} : assSubquotient(s);
            if (ass.contains(*local)) {
              r = localVNumber(s, *local, ass);
            } else {
              r.prime = local;
            }
          } else {
            r = globalVNumber(s);
          }
          text = r.value.toString();
          if (r.witness) text += " witness " + toString(*ring_, *r.witness);
          if (r.global && r.prime) text += " attained at " + toString(*r.prime);
          const auto parsed = ojson::parse(toJson(r));
          for (const auto& [k, v] : parsed.items()) j[k] = v;
          break;
        }
        case CommandKind::Indeg: {
          const auto r = indegQuotient(s);
          text = r.value.toString();
          if (r.witness) text += " witness " + toString(*ring_, *r.witness);
          j["value"] = valueJson(r.value);
          j["witness"] = r.witness ? ojson(toString(*ring_, *r.witness)) : ojson(nullptr);
          break;
        }
        case CommandKind::Reg: {
          const auto r = evaluateInvariant(Invariant::reg(), s);
          text = r.toString();
          j["value"] = valueJson(r);
          break;
        }
        case CommandKind::Hilbert: {
          if (!s.isCyclic()) throw Error(ErrorCode::Unsupported, "hilbert needs a cyclic module R/B");
          const auto rep = staircase(s.bottom());
          const auto csv = hilbertCsv(rep);
          text = "length " + std::to_string(rep.standard_count) + ", end " + rep.end.toString() + "\n" + csv;
          if (!text.empty() && text.back() == '\n') text.pop_back();
          j["length"] = rep.standard_count;
          j["end"] = valueJson(rep.end);
          ojson h = ojson::array();
          for (const auto& [deg, count] : rep.hilbert) h.push_back({{"degree", deg}, {"count", count}});
          j["hilbert"] = std::move(h);
          writeArtifact("hilbert", "csv", csv);
          break;
        }
        default: break;
      }
    } catch (const Error& e) {
      pointError(e.what());
      text = std::string("error: ") + e.what();
      j["error"] = e.what();
    }
    if (json()) {
      emit(j);
    } else {
      out_ << head << ": " << text << '\n';
    }
  }

  GridBox box(const Command& c) const { return GridBox(c.lo, c.hi); }

  void stableAss(const Command& c, const ModulePattern& pattern) {
    const auto b = box(c);
    StableAssOptions opts;
    opts.jobs = config_.jobs;
    const auto rep = stableAssWindow(pattern, b, opts);
    const char* verdict = rep.verdict == StabilityVerdict::Stable ? "stable" : "inconclusive";
    if (json()) {
      ojson j;
      j["command"] = "ass";
      j["pattern"] = describe(pattern);
      j["box"] = {{"lo", pointJson(b.lo())}, {"hi", pointJson(b.hi())}};
      j["ass"] = ojson::parse(toJson(rep.stable_set));
      j["window"] = {{"lo", pointJson(rep.window.lo())}, {"hi", pointJson(rep.window.hi())}};
      j["verdict"] = verdict;
      emit(j);
    } else {
      out_ << "ass of " << describe(pattern) << " on box " << toString(b) << ": " << assText(rep.stable_set)
           << " on " << toString(rep.window) << ' ' << verdict << '\n';
    }
  }

  SurveyTable surveyTable(const Command& c, const ModulePattern& pattern) {
    SurveyOptions opts;
    opts.jobs = config_.jobs;
    auto table = surveyFunction(pattern, invariant(*c.invariant), box(c), opts);
    const auto points = table.box.points();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!table.cells[i].ok()) pointError("at " + toString(points[i]) + ": " + *table.cells[i].error);
    }
    return table;
  }

  void survey(const Command& c, const ModulePattern& pattern) {
    const auto table = surveyTable(c, pattern);
    const auto csv = toCsv(table);
    const auto js = toJson(table);
    writeArtifact("survey", json() ? "json" : "csv", json() ? js + "\n" : csv);
    if (json()) {
      auto j = ojson::parse(js);
      ojson wrapped;
      wrapped["command"] = "survey";
      for (const auto& [k, v] : j.items()) wrapped[k] = v;
      emit(wrapped);
    } else {
      out_ << "survey " << table.invariant << " of " << table.pattern << " on box " << toString(table.box) << '\n'
           << csv;
    }
  }

  void fit(const Command& c, const ModulePattern& pattern) {
    const auto table = surveyTable(c, pattern);
    const auto alphabet = c.alphabet ? *c.alphabet : defaultAlphabet(pattern);
    const auto model = fitMinLinearEnvelope(table, alphabet, FitOptions{config_.tail_fraction});
    const auto inv = invariant(*c.invariant);
    const auto report = verifyTheoremPredictions(pattern, inv, model);
    const auto modelJson = toJson(model);
    writeArtifact("fit", "json", modelJson + "\n");
    if (json()) {
      ojson j;
      j["command"] = "fit";
      j["pattern"] = table.pattern;
      j["invariant"] = table.invariant;
      j["model"] = ojson::parse(modelJson);
      j["alphabet_check"] = checkStatusName(report.alphabet);
      ojson outside = ojson::array();
      for (const auto& p : report.out_of_alphabet) outside.push_back({{"w", pointJson(p.slopes)}, {"c", p.constant}});
      j["out_of_alphabet"] = std::move(outside);
      j["linearity_check"] = checkStatusName(report.linearity);
      if (!report.expected_slopes.empty()) j["expected_slopes"] = pointJson(report.expected_slopes);
      j["note"] = report.note;
      emit(j);
      return;
    }
    out_ << "fit " << table.invariant << " of " << table.pattern << " on box " << toString(table.box) << ": "
         << fitVerdictName(model.verdict) << " on tail " << toString(model.tail) << ", residual " << model.residual
         << '\n';
    for (const auto& p : model.planes) out_ << "  plane " << toString(p) << '\n';
    out_ << "  alphabet check: " << checkStatusName(report.alphabet) << '\n';
    for (const auto& p : report.out_of_alphabet) out_ << "  out of alphabet: " << toString(p) << '\n';
    out_ << "  linearity check: " << checkStatusName(report.linearity);
    if (!report.expected_slopes.empty()) out_ << " (expected slopes " << toString(report.expected_slopes) << ")";
    out_ << '\n';
    if (!report.note.empty()) out_ << "  note: " << report.note << '\n';
  }

  void coincide(const Command& c, const ModulePattern& pattern) {
    CoincidenceOptions opts;
    opts.jobs = config_.jobs;
    opts.tail_fraction = config_.tail_fraction;
    const auto rep = coincidenceCheck(pattern, box(c), opts);
    for (const auto& row : rep.rows) {
      for (std::size_t i = 0; i < row.successive.cells.size(); ++i) {
        if (!row.successive.cells[i].ok()) pointError(*row.successive.cells[i].error);
        if (!row.quotient.cells[i].ok()) pointError(*row.quotient.cells[i].error);
      }
    }
    auto rowName = [](const CoincidenceRow& r) { return r.prime ? "v local " + toString(*r.prime) : std::string("v"); };
    if (json()) {
      ojson j;
      j["command"] = "coincide";
      j["pattern"] = describe(pattern);
      j["hypotheses_verified"] = rep.hypotheses_verified;
      j["hypotheses_note"] = rep.hypotheses_note;
      j["stable_ass"] = ojson::parse(toJson(rep.stable.stable_set));
      j["stable_window"] = {{"lo", pointJson(rep.stable.window.lo())}, {"hi", pointJson(rep.stable.window.hi())}};
      j["checked_tail"] = {{"lo", pointJson(rep.checked_tail.lo())}, {"hi", pointJson(rep.checked_tail.hi())}};
      j["ass_agrees_on_tail"] = rep.ass_agrees_on_tail;
      ojson rows = ojson::array();
      for (const auto& row : rep.rows) {
        ojson r;
        r["invariant"] = rowName(row);
        r["agrees_on_tail"] = row.agrees_on_tail;
        r["agreement_onset"] = row.agreement_onset ? pointJson(*row.agreement_onset) : ojson(nullptr);
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      j["all_agree"] = rep.allAgreeOnTail();
      emit(j);
      return;
    }
    out_ << "coincide of " << describe(pattern) << " on box " << toString(box(c)) << ": "
         << (rep.allAgreeOnTail() ? "agree" : "disagree") << " on tail " << toString(rep.checked_tail) << '\n';
    out_ << "  hypotheses: " << (rep.hypotheses_verified ? "verified" : "not verified") << " ("
         << rep.hypotheses_note << ")\n";
    out_ << "  stable ass: " << assText(rep.stable.stable_set) << " on " << toString(rep.stable.window) << ' '
         << (rep.stable.verdict == StabilityVerdict::Stable ? "stable" : "inconclusive") << '\n';
    out_ << "  ass: " << (rep.ass_agrees_on_tail ? "agrees" : "differs") << '\n';
    for (const auto& row : rep.rows) {
      out_ << "  " << rowName(row) << ": " << (row.agrees_on_tail ? "agrees" : "differs") << ", onset "
           << (row.agreement_onset ? toString(*row.agreement_onset) : std::string("none")) << '\n';
    }
  }

  void checkExamples() {
    GoldenOptions opts;
    opts.jobs = config_.jobs;
    bool all = true;
    for (const auto& rep : runGoldenSuites(opts)) {
      for (const auto& claim : rep.claims) {
        all = all && claim.pass;
        if (json()) {
          ojson j;
          j["command"] = "check-examples";
          j["suite"] = rep.suite;
          j["claim"] = claim.claim;
          j["pass"] = claim.pass;
          j["detail"] = claim.detail;
          emit(j);
        } else {
          out_ << (claim.pass ? "PASS " : "FAIL ") << rep.suite << ": " << claim.claim << " (" << claim.detail
               << ")\n";
        }
      }
    }
    if (!all) throw Fatal{"check-examples: some claims failed"};
  }

  const ExecConfig& config_;
  std::ostringstream out_;
  std::ostringstream errors_;
  int exit_ = 0;
  std::size_t line_ = 0;
  std::size_t index_ = 0;
  RingPtr ring_;
  std::map<std::string, MonomialIdeal> ideals_;
  std::map<std::string, ModulePattern> patterns_;
};

}  // namespace

ExecResult execute(const SessionAst& ast, const ExecConfig& config) { return Executor(config).run(ast); }

}  // namespace vnum
