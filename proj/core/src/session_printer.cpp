#include <sstream>

#include "vnum/session.hpp"

namespace vnum {

namespace {

void print(std::ostream& out, const MonomialAst& m) {
  if (m.factors.empty()) {
    out << '1';
    return;
  }
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) out << '*';
    out << m.factors[i].first;
    if (m.factors[i].second != 1) out << '^' << m.factors[i].second;
  }
}

void print(std::ostream& out, const IdealLiteral& lit) {
  out << '(';
  if (lit.zero) {
    out << '0';
  } else {
    for (std::size_t i = 0; i < lit.gens.size(); ++i) {
      if (i) out << ", ";
      print(out, lit.gens[i]);
    }
  }
  out << ')';
}

void print(std::ostream& out, const IdealRef& r) {
  switch (r.kind) {
    case IdealRef::Kind::Name: out << r.name; break;
    case IdealRef::Kind::Zero: out << '0'; break;
    case IdealRef::Kind::Unit: out << "unit"; break;
    case IdealRef::Kind::Literal: print(out, r.literal); break;
  }
}

void print(std::ostream& out, const PatternExpr& p) {
  if (p.name) {
    out << *p.name;
    return;
  }
  out << patternKindName(p.kind) << "(base=";
  print(out, p.base);
  out << "; powers ";
  for (std::size_t i = 0; i < p.powers.size(); ++i) {
    if (i) out << ", ";
    print(out, p.powers[i]);
  }
  out << "; sub=";
  print(out, p.sub);
  out << ')';
}

void printPrime(std::ostream& out, const std::vector<std::string>& vars) {
  out << '(';
  if (vars.empty()) out << '0';
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
  out << ')';
}

void printPoint(std::ostream& out, const GridPoint& p) { out << toString(p); }

void print(std::ostream& out, const InvariantAst& inv) {
  switch (inv.kind) {
    case InvariantKind::V: out << 'v'; break;
    case InvariantKind::VLocal:
      out << "v local ";
      printPrime(out, inv.prime);
      break;
    case InvariantKind::Indeg: out << "indeg"; break;
    case InvariantKind::Reg: out << "reg"; break;
  }
}

void print(std::ostream& out, const Command& c) {
  out << commandKeyword(c.kind);
  if (c.kind == CommandKind::CheckExamples) return;
  if (c.invariant) {
    out << ' ';
    print(out, *c.invariant);
  }
  out << " of ";
  print(out, c.pattern);
  switch (c.kind) {
    case CommandKind::Ass:
    case CommandKind::VNumber:
    case CommandKind::Indeg:
    case CommandKind::Reg:
    case CommandKind::Hilbert:
      out << " at ";
      printPoint(out, c.at);
      if (c.local) {
        out << " local ";
        printPrime(out, *c.local);
      }
      break;
    default:
      out << " on box ";
      printPoint(out, c.lo);
      out << "..";
      printPoint(out, c.hi);
      if (c.alphabet) {
        out << " alphabet [";
        for (std::size_t i = 0; i < c.alphabet->size(); ++i) {
          out << (i ? ", " : "") << '[';
          for (std::size_t j = 0; j < (*c.alphabet)[i].size(); ++j) out << (j ? ", " : "") << (*c.alphabet)[i][j];
          out << ']';
        }
        out << ']';
      }
      break;
  }
}

}  // namespace

std::string printSession(const SessionAst& ast) {
  std::ostringstream out;
  for (const auto& st : ast.statements) {
    if (const auto* r = std::get_if<RingDecl>(&st.node)) {
      out << "ring " << r->name << " = vars";
      for (const auto& v : r->vars) out << ' ' << v;
      out << " weights";
      for (auto w : r->weights) out << ' ' << w;
    } else if (const auto* d = std::get_if<IdealDecl>(&st.node)) {
      out << "ideal " << d->name << " = ";
      print(out, d->value);
    } else if (const auto* p = std::get_if<PatternDecl>(&st.node)) {
      out << "pattern " << p->name << " = ";
      print(out, p->value);
    } else {
      print(out, std::get<Command>(st.node));
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace vnum
