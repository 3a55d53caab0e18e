#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vnum/asymptotics.hpp"

namespace vnum {

// ---- AST ------------------------------------------------------------------
// Source positions are kept for diagnostics but ignored by equality, so a
// parse of printed output compares equal to the original parse.

struct SourcePos {
  std::size_t line = 1;
  std::size_t col = 1;

  bool operator==(const SourcePos&) const { return true; }
};

struct MonomialAst {
  /// Variable and exponent as written; empty for the literal `1`.
  std::vector<std::pair<std::string, std::int64_t>> factors;

  bool operator==(const MonomialAst&) const = default;
};

struct IdealLiteral {
  bool zero = false;
  std::vector<MonomialAst> gens;

  bool operator==(const IdealLiteral&) const = default;
};

struct IdealRef {
  enum class Kind { Name, Zero, Unit, Literal };
  Kind kind = Kind::Zero;
  std::string name;
  IdealLiteral literal;

  bool operator==(const IdealRef&) const = default;
};

struct PatternExpr {
  /// Set when the pattern refers to a declared pattern by name.
  std::optional<std::string> name;
  PatternKind kind = PatternKind::QuotientByPower;
  IdealRef base;
  std::vector<IdealRef> powers;
  IdealRef sub{IdealRef::Kind::Unit, {}, {}};

  bool operator==(const PatternExpr&) const = default;
};

struct InvariantAst {
  InvariantKind kind = InvariantKind::V;
  std::vector<std::string> prime;  // VLocal: variable names

  bool operator==(const InvariantAst&) const = default;
};

struct RingDecl {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::int64_t> weights;

  bool operator==(const RingDecl&) const = default;
};

struct IdealDecl {
  std::string name;
  IdealLiteral value;

  bool operator==(const IdealDecl&) const = default;
};

struct PatternDecl {
  std::string name;
  PatternExpr value;

  bool operator==(const PatternDecl&) const = default;
};

enum class CommandKind { Ass, StableAss, VNumber, Indeg, Reg, Hilbert, Survey, Fit, Coincide, CheckExamples };

const char* commandKeyword(CommandKind kind);

struct Command {
  CommandKind kind = CommandKind::CheckExamples;
  PatternExpr pattern;
  std::optional<InvariantAst> invariant;         // survey, fit
  GridPoint at;                                  // point commands
  GridPoint lo, hi;                              // box commands
  std::optional<std::vector<std::string>> local; // vnumber ... local (x,z)
  std::optional<SlopeAlphabet> alphabet;         // fit ... alphabet [[..],..]

  bool operator==(const Command&) const = default;
};

struct Statement {
  SourcePos pos;
  std::variant<RingDecl, IdealDecl, PatternDecl, Command> node;

  bool operator==(const Statement&) const = default;
};

struct SessionAst {
  std::vector<Statement> statements;

  bool operator==(const SessionAst&) const = default;
};

// ---- parsing --------------------------------------------------------------

struct Diagnostic {
  std::size_t line = 1;
  std::size_t col = 1;
  std::string message;
  /// Tokens that would have been accepted, when the error is syntactic.
  std::vector<std::string> expected;

  /// `3:14: error: message; expected one of: ';', ','`.
  std::string format() const;
};

struct ParseResult {
  std::optional<SessionAst> ast;
  std::optional<Diagnostic> diagnostic;

  bool ok() const { return ast.has_value(); }
};

/// Parses and checks a session: names declared before use, no duplicate
/// names, a single ring, arities matching the pattern. Never throws on bad
/// input; the first problem is reported as a diagnostic.
ParseResult parseSession(std::string_view text);

/// Canonical text of a session, one statement per line.
std::string printSession(const SessionAst& ast);

// ---- execution ------------------------------------------------------------

enum class OutputFormat { Csv, Json };

struct ExecConfig {
  unsigned jobs = 1;
  /// Directory for per-command artifacts (tables and models); none if empty.
  std::string out_dir;
  OutputFormat format = OutputFormat::Csv;
  double tail_fraction = 0.5;
};

struct ExecResult {
  /// 0 success, 2 per-point computation errors present, 1 fatal error.
  int exit_code = 0;
  std::string output;
  std::string errors;
};

ExecResult execute(const SessionAst& ast, const ExecConfig& config = {});

}  // namespace vnum
