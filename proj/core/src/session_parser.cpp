#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "vnum/error.hpp"
#include "vnum/session.hpp"

namespace vnum {

const char* commandKeyword(CommandKind kind) {
  switch (kind) {
    case CommandKind::Ass:
    case CommandKind::StableAss: return "ass";
    case CommandKind::VNumber: return "vnumber";
    case CommandKind::Indeg: return "indeg";
    case CommandKind::Reg: return "reg";
    case CommandKind::Hilbert: return "hilbert";
    case CommandKind::Survey: return "survey";
    case CommandKind::Fit: return "fit";
    case CommandKind::Coincide: return "coincide";
    case CommandKind::CheckExamples: return "check-examples";
  }
  return "?";
}

std::string Diagnostic::format() const {
  std::string out = std::to_string(line) + ":" + std::to_string(col) + ": error: " + message;
  if (!expected.empty()) {
    out += "; expected ";
    out += expected.size() == 1 ? "" : "one of: ";
    for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  }
  return out;
}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  SourcePos pos;
};

struct Failure {
  Diagnostic diag;
};

[[noreturn]] void fail(const SourcePos& pos, std::string message, std::vector<std::string> expected = {}) {
  throw Failure{{pos.line, pos.col, std::move(message), std::move(expected)}};
}

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++pos.line;
      pos.col = 1;
    } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      ++pos.col;
    }
    ++i;
  };
  // Column counts code points: continuation bytes do not advance it.
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t;
    t.pos = pos;
    if (identStart(c)) {
      t.kind = Tok::Ident;
      // A hyphen joins two word parts (`check-examples`).
      while (i < s.size() && (identChar(s[i]) || (s[i] == '-' && i + 1 < s.size() && identStart(s[i + 1])))) {
        t.text += s[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.text += s[i];
        if (__builtin_mul_overflow(t.value, 10, &t.value) || __builtin_add_overflow(t.value, s[i] - '0', &t.value)) {
          fail(t.pos, "integer literal too large");
        }
        advance();
      }
      if (i < s.size() && identStart(s[i])) fail(pos, "unexpected letter after integer");
    } else if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      t.kind = Tok::Punct;
      t.text = "..";
      advance();
      advance();
    } else if (std::string_view("=;(),^*[]").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance();
    } else {
      std::string shown;
      if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
        static const char* hex = "0123456789abcdef";
        shown = std::string("byte 0x") + hex[(c >> 4) & 0xF] + hex[c & 0xF];
      } else {
        shown = std::string("'") + c + "'";
      }
      fail(pos, "unexpected character " + shown);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

const std::set<std::string>& reservedWords() {
  static const std::set<std::string> words = {
      "ring", "ideal", "pattern", "vars", "weights", "quotient", "power_subquotient", "successive",
      "base", "powers", "sub", "unit", "of", "at", "on", "box", "local", "alphabet", "v",
      "indeg", "reg", "ass", "vnumber", "hilbert", "survey", "fit", "coincide", "check-examples"};
  return words;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SessionAst session() {
    SessionAst ast;
    while (peek().kind != Tok::End) ast.statements.push_back(statement());
    return ast;
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool isPunct(const std::string& p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool isWord(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }
  static std::string describeTok(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Int: return "integer " + t.text;
      case Tok::Ident: return quote(t.text);
      case Tok::Punct: return quote(t.text);
    }
    return "?";
  }
  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    fail(peek().pos, "unexpected " + describeTok(peek()), std::move(expected));
  }
  void expectPunct(const std::string& p) {
    if (!isPunct(p)) unexpected({quote(p)});
    next();
  }
  void expectWord(const std::string& w) {
    if (!isWord(w)) unexpected({quote(w)});
    next();
  }
  bool acceptPunct(const std::string& p) {
    if (!isPunct(p)) return false;
    next();
    return true;
  }
  bool acceptWord(const std::string& w) {
    if (!isWord(w)) return false;
    next();
    return true;
  }
  Token ident(const std::string& what) {
    if (peek().kind != Tok::Ident) unexpected({what});
    return next();
  }
  Token integer(const std::string& what = "integer") {
    if (peek().kind != Tok::Int) unexpected({what});
    return next();
  }

  // ---- declarations ----
  std::string declaredName(const std::string& what) {
    const auto t = ident(what);
    if (reservedWords().count(t.text)) fail(t.pos, quote(t.text) + " is a reserved word");
    if (names_.count(t.text)) fail(t.pos, "duplicate name " + quote(t.text));
    return t.text;
  }

  void requireRing(const SourcePos& pos) const {
    if (!ring_) fail(pos, "no ring declared");
  }

  Statement statement() {
    Statement st;
    st.pos = peek().pos;
    if (peek().kind != Tok::Ident) unexpected(statementStarts());
    const auto& w = peek().text;
    if (w == "ring") {
      st.node = ringDecl();
    } else if (w == "ideal") {
      st.node = idealDecl();
    } else if (w == "pattern") {
      st.node = patternDecl();
    } else if (w == "ass" || w == "vnumber" || w == "indeg" || w == "reg" || w == "hilbert" || w == "survey" ||
               w == "fit" || w == "coincide" || w == "check-examples") {
      st.node = command();
    } else {
      unexpected(statementStarts());
    }
    expectPunct(";");
    return st;
  }

  static std::vector<std::string> statementStarts() {
    return {"'ring'", "'ideal'", "'pattern'", "'ass'", "'vnumber'", "'indeg'", "'reg'", "'hilbert'",
            "'survey'", "'fit'", "'coincide'", "'check-examples'"};
  }

  RingDecl ringDecl() {
    const auto kw = next();
    if (ring_) fail(kw.pos, "only one ring may be declared per session");
    RingDecl d;
    d.name = declaredName("ring name");
    expectPunct("=");
    expectWord("vars");
    std::set<std::string> seen;
    while (peek().kind == Tok::Ident && !isWord("weights")) {
      const auto v = next();
      if (!seen.insert(v.text).second) fail(v.pos, "duplicate variable " + quote(v.text));
      if (d.vars.size() == kMaxVars) fail(v.pos, "arity mismatch: at most " + std::to_string(kMaxVars) + " variables");
      d.vars.push_back(v.text);
    }
    if (d.vars.empty()) unexpected({"variable name"});
    if (acceptWord("weights")) {
      while (peek().kind == Tok::Int) {
        const auto w = next();
        if (w.value < 1) fail(w.pos, "weights must be >= 1");
        d.weights.push_back(w.value);
      }
      if (d.weights.size() != d.vars.size()) {
        fail(peek().pos, "arity mismatch: " + std::to_string(d.vars.size()) + " variables but " +
                             std::to_string(d.weights.size()) + " weights",
             d.weights.size() < d.vars.size() ? std::vector<std::string>{"integer"} : std::vector<std::string>{});
      }
    } else {
      d.weights.assign(d.vars.size(), 1);
    }
    ring_ = d;
    names_[d.name] = Kind::Ring;
    return d;
  }

  IdealDecl idealDecl() {
    const auto kw = next();
    requireRing(kw.pos);
    IdealDecl d;
    d.name = declaredName("ideal name");
    expectPunct("=");
    d.value = idealLiteral();
    names_[d.name] = Kind::Ideal;
    idealZero_[d.name] = d.value.zero;
    return d;
  }

  PatternDecl patternDecl() {
    const auto kw = next();
    requireRing(kw.pos);
    PatternDecl d;
    d.name = declaredName("pattern name");
    expectPunct("=");
    d.value = patternExpr();
    names_[d.name] = Kind::Pattern;
    patternRank_[d.name] = rankOf(d.value);
    return d;
  }

  std::size_t rankOf(const PatternExpr& p) const { return p.name ? patternRank_.at(*p.name) : p.powers.size(); }

  // ---- ideals ----
  IdealLiteral idealLiteral() {
    IdealLiteral lit;
    expectPunct("(");
    if (peek().kind == Tok::Int && peek().value == 0) {
      next();
      lit.zero = true;
    } else {
      do {
        lit.gens.push_back(monomial());
      } while (acceptPunct(","));
    }
    if (!isPunct(")")) unexpected(lit.zero ? std::vector<std::string>{"')'"} : std::vector<std::string>{"','", "')'", "'*'", "'^'"});
    next();
    return lit;
  }

  MonomialAst monomial() {
    MonomialAst m;
    if (peek().kind == Tok::Int) {
      if (peek().value != 1) fail(peek().pos, "only the constant 1 is a monomial");
      next();
      return m;
    }
    do {
      if (peek().kind != Tok::Ident) unexpected({"variable name", "'1'"});
      const auto v = next();
      if (std::find(ring_->vars.begin(), ring_->vars.end(), v.text) == ring_->vars.end()) {
        fail(v.pos, "unknown identifier " + quote(v.text) + ": not a variable of ring " + quote(ring_->name));
      }
      std::int64_t e = 1;
      if (acceptPunct("^")) e = integer("exponent").value;
      m.factors.emplace_back(v.text, e);
    } while (acceptPunct("*"));
    return m;
  }

  IdealRef idealRef() {
    IdealRef r;
    if (peek().kind == Tok::Int && peek().value == 0) {
      next();
      r.kind = IdealRef::Kind::Zero;
    } else if (isPunct("(")) {
      r.kind = IdealRef::Kind::Literal;
      r.literal = idealLiteral();
    } else if (isWord("unit")) {
      next();
      r.kind = IdealRef::Kind::Unit;
    } else if (peek().kind == Tok::Ident) {
      const auto t = next();
      const auto it = names_.find(t.text);
      if (it == names_.end()) fail(t.pos, "unknown identifier " + quote(t.text));
      if (it->second != Kind::Ideal) fail(t.pos, quote(t.text) + " is not an ideal");
      r.kind = IdealRef::Kind::Name;
      r.name = t.text;
    } else {
      unexpected({"ideal name", "'0'", "'unit'", "'('"});
    }
    return r;
  }

  bool isZeroRef(const IdealRef& r) const {
    switch (r.kind) {
      case IdealRef::Kind::Zero: return true;
      case IdealRef::Kind::Unit: return false;
      case IdealRef::Kind::Literal: return r.literal.zero;
      case IdealRef::Kind::Name: return idealZero_.at(r.name);
    }
    return false;
  }

  // ---- patterns ----
  PatternExpr patternExpr() {
    PatternExpr p;
    if (peek().kind != Tok::Ident) unexpected({"pattern name", "'quotient'", "'power_subquotient'", "'successive'"});
    const auto t = peek();
    std::optional<PatternKind> kind;
    if (t.text == "quotient") kind = PatternKind::QuotientByPower;
    if (t.text == "power_subquotient") kind = PatternKind::PowerSubquotient;
    if (t.text == "successive") kind = PatternKind::SuccessivePower;
    if (!kind) {
      next();
      const auto it = names_.find(t.text);
      if (it == names_.end()) fail(t.pos, "unknown identifier " + quote(t.text));
      if (it->second != Kind::Pattern) fail(t.pos, quote(t.text) + " is not a pattern");
      p.name = t.text;
      return p;
    }
    requireRing(t.pos);
    next();
    p.kind = *kind;
    expectPunct("(");
    if (acceptWord("base")) {
      expectPunct("=");
      p.base = idealRef();
      expectPunct(";");
    }
    if (!isWord("powers")) unexpected(p.base.kind == IdealRef::Kind::Zero ? std::vector<std::string>{"'base'", "'powers'"}
                                                                           : std::vector<std::string>{"'powers'"});
    next();
    do {
      const auto at = peek().pos;
      p.powers.push_back(idealRef());
      if (isZeroRef(p.powers.back())) fail(at, "the ideals of a pattern must be nonzero");
    } while (acceptPunct(","));
    if (acceptPunct(";")) {
      expectWord("sub");
      expectPunct("=");
      p.sub = idealRef();
    }
    if (!isPunct(")")) unexpected({"','", "';'", "')'"});
    next();
    return p;
  }

  // ---- commands ----
  GridPoint point(std::size_t rank) {
    const auto open = peek().pos;
    expectPunct("(");
    GridPoint pt;
    do {
      pt.push_back(integer().value);
    } while (acceptPunct(","));
    expectPunct(")");
    if (pt.size() != rank) {
      fail(open, "arity mismatch: pattern has " + std::to_string(rank) + " ideal(s) but the point has " +
                     std::to_string(pt.size()) + " coordinate(s)");
    }
    return pt;
  }

  void box(std::size_t rank, Command& c) {
    expectWord("box");
    const auto at = peek().pos;
    c.lo = point(rank);
    expectPunct("..");
    c.hi = point(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if (c.lo[i] > c.hi[i]) fail(at, "box corner " + toString(c.lo) + " is not below " + toString(c.hi));
    }
  }

  std::vector<std::string> primeLiteral() {
    expectPunct("(");
    std::vector<std::string> vars;
    if (peek().kind == Tok::Int && peek().value == 0) {
      next();
    } else {
      do {
        const auto v = ident("variable name");
        if (std::find(ring_->vars.begin(), ring_->vars.end(), v.text) == ring_->vars.end()) {
          fail(v.pos, "unknown identifier " + quote(v.text) + ": not a variable of ring " + quote(ring_->name));
        }
        if (std::find(vars.begin(), vars.end(), v.text) != vars.end()) fail(v.pos, "duplicate variable " + quote(v.text));
        vars.push_back(v.text);
      } while (acceptPunct(","));
    }
    expectPunct(")");
    return vars;
  }

  InvariantAst invariant() {
    InvariantAst inv;
    if (acceptWord("v")) {
      if (acceptWord("local")) {
        requireRing(peek().pos);
        inv.kind = InvariantKind::VLocal;
        inv.prime = primeLiteral();
      }
    } else if (acceptWord("indeg")) {
      inv.kind = InvariantKind::Indeg;
    } else if (acceptWord("reg")) {
      inv.kind = InvariantKind::Reg;
    } else {
      unexpected({"'v'", "'indeg'", "'reg'"});
    }
    return inv;
  }

  SlopeAlphabet alphabet(std::size_t rank) {
    const auto open = peek().pos;
    SlopeAlphabet a;
    expectPunct("[");
    do {
      expectPunct("[");
      std::vector<std::int64_t> row;
      do {
        row.push_back(integer().value);
      } while (acceptPunct(","));
      expectPunct("]");
      a.push_back(std::move(row));
    } while (acceptPunct(","));
    expectPunct("]");
    if (a.size() != rank) {
      fail(open, "arity mismatch: pattern has " + std::to_string(rank) + " ideal(s) but the alphabet has " +
                     std::to_string(a.size()) + " row(s)");
    }
    return a;
  }

  Command command() {
    const auto kw = next();
    Command c;
    if (kw.text == "check-examples") return c;
    if (kw.text == "survey" || kw.text == "fit") c.invariant = invariant();
    expectWord("of");
    c.pattern = patternExpr();
    const auto rank = rankOf(c.pattern);
    if (kw.text == "ass") {
      if (acceptWord("at")) {
        c.kind = CommandKind::Ass;
        c.at = point(rank);
      } else if (acceptWord("on")) {
        c.kind = CommandKind::StableAss;
        box(rank, c);
      } else {
        unexpected({"'at'", "'on'"});
      }
    } else if (kw.text == "vnumber" || kw.text == "indeg" || kw.text == "reg" || kw.text == "hilbert") {
      c.kind = kw.text == "vnumber" ? CommandKind::VNumber
               : kw.text == "indeg" ? CommandKind::Indeg
               : kw.text == "reg"   ? CommandKind::Reg
                                    : CommandKind::Hilbert;
      expectWord("at");
      c.at = point(rank);
      if (c.kind == CommandKind::VNumber && acceptWord("local")) c.local = primeLiteral();
    } else {
      c.kind = kw.text == "survey" ? CommandKind::Survey : kw.text == "fit" ? CommandKind::Fit : CommandKind::Coincide;
      expectWord("on");
      box(rank, c);
      if (c.kind == CommandKind::Fit && acceptWord("alphabet")) c.alphabet = alphabet(rank);
    }
    return c;
  }

  enum class Kind { Ring, Ideal, Pattern };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<RingDecl> ring_;
  std::map<std::string, Kind> names_;
  std::map<std::string, bool> idealZero_;
  std::map<std::string, std::size_t> patternRank_;
};

}  // namespace

ParseResult parseSession(std::string_view text) {
  ParseResult result;
  try {
    Parser parser(lex(text));
    result.ast = parser.session();
  } catch (const Failure& f) {
    result.diagnostic = f.diag;
  } catch (const std::exception& e) {
    result.diagnostic = Diagnostic{1, 1, std::string("internal parser error: ") + e.what(), {}};
  }
  return result;
}

}  // namespace vnum
