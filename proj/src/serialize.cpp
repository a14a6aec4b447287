#include "fourval/serialize.hpp"

#include "fourval/engine.hpp"

namespace fourval {

namespace {

int precedence(BinaryConnector op) {
  switch (op) {
    case BinaryConnector::ImpMat:
    case BinaryConnector::ImpFde:
    case BinaryConnector::ImpHook:
    case BinaryConnector::ImpFdeStar:
    case BinaryConnector::ImpHookStar:
      return 0;
    case BinaryConnector::Or: return 1;
    case BinaryConnector::KJoin: return 2;
    case BinaryConnector::And: return 3;
    case BinaryConnector::KMeet:
    case BinaryConnector::ODot:
      return 4;
  }
  return 0;
}

bool is_implication(BinaryConnector op) { return precedence(op) == 0; }

int node_precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return 6;
    case Formula::Kind::Unary: return 5;
    case Formula::Kind::Binary: return precedence(f.binary_op());
  }
  return 6;
}

// Value-testing connectors print as calls: T(x), inc(x); the other
// unaries are prefixes: ~x, conf x, compl x.
bool call_style(UnaryConnector op) {
  switch (op) {
    case UnaryConnector::Neg:
    case UnaryConnector::Conf:
    case UnaryConnector::Compl:
      return false;
    default:
      return true;
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += serialize(f.atom_ref());
      return;
    case Formula::Kind::Unary: {
      const UnaryConnector op = f.unary_op();
      const Formula inner = f.child();
      if (call_style(op)) {
        out += unary_name(op);
        out += '(';
        print(inner, out);
        out += ')';
        return;
      }
      out += unary_name(op);
      if (op != UnaryConnector::Neg) out += ' ';
      if (inner.kind() == Formula::Kind::Binary) {
        out += '(';
        print(inner, out);
        out += ')';
      } else {
        print(inner, out);
      }
      return;
    }
    case Formula::Kind::Binary: {
      const BinaryConnector op = f.binary_op();
      const int p = precedence(op);
      const bool right_assoc = is_implication(op);
      const Formula l = f.lhs();
      const Formula r = f.rhs();
      // Parenthesize a child that would otherwise regroup on reparse.
      const bool lparen =
          right_assoc ? node_precedence(l) <= p : node_precedence(l) < p;
      const bool rparen =
          right_assoc ? node_precedence(r) < p : node_precedence(r) <= p;
      if (lparen) out += '(';
      print(l, out);
      if (lparen) out += ')';
      out += ' ';
      out += binary_name(op);
      out += ' ';
      if (rparen) out += '(';
      print(r, out);
      if (rparen) out += ')';
      return;
    }
  }
}

}  // namespace

std::string serialize(TruthValue v) { return std::string(1, to_char(v)); }

std::string serialize(const Term& t) {
  return t.is_variable() ? "?" + t.text : t.text;
}

std::string serialize(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  // A sole constant argument spelled x or o would lex back as the
  // connector (x) or (o); spacing it out keeps the round trip exact.
  if (a.args.size() == 1 && !a.args[0].is_variable() &&
      (a.args[0].text == "x" || a.args[0].text == "o")) {
    return a.predicate + "( " + a.args[0].text + " )";
  }
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += serialize(a.args[i]);
  }
  out += ")";
  return out;
}

std::string serialize(const Fact& f) { return serialize(f.atom()); }

std::string serialize(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string serialize(const Rule& r) {
  std::string out = "rule ";
  if (r.negative_head) out += "~";
  out += serialize(r.head);
  out += " <- ";
  out += serialize(r.body);
  out += ".";
  return out;
}

std::string serialize(const VSet& s) {
  std::string out;
  for (const auto& [fact, value] : s) {
    out += serialize(fact);
    out += " = ";
    out += to_char(value);
    out += ".\n";
  }
  return out;
}

std::string serialize(const Database& db) {
  std::string out = serialize(db.extension);
  for (const Rule& r : db.rules) {
    out += serialize(r);
    out += "\n";
  }
  return out;
}

}  // namespace fourval
