#include "fourval/updates.hpp"

namespace fourval {

namespace {

const Atom kNew{"NEW", {}};
const Atom kCur{"CUR", {}};

void validate(const Formula& f, bool& saw_new, bool& saw_cur) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Atom& a = f.atom_ref();
      if (a == kNew)
        saw_new = true;
      else if (a == kCur)
        saw_cur = true;
      else
        throw Error("malformed combinator: leaf " + a.predicate +
                    " is not a NEW/CUR placeholder");
      return;
    }
    case Formula::Kind::Unary:
      if (f.unary_op() != UnaryConnector::Neg)
        throw Error(std::string("malformed combinator: connector ") +
                    std::string(unary_name(f.unary_op())) + " is not allowed");
      validate(f.child(), saw_new, saw_cur);
      return;
    case Formula::Kind::Binary:
      switch (f.binary_op()) {
        case BinaryConnector::Or:
        case BinaryConnector::And:
        case BinaryConnector::KJoin:
        case BinaryConnector::KMeet:
        case BinaryConnector::ODot:
          validate(f.lhs(), saw_new, saw_cur);
          validate(f.rhs(), saw_new, saw_cur);
          return;
        default:
          throw Error(std::string("malformed combinator: connector ") +
                      std::string(binary_name(f.binary_op())) + " is not allowed");
      }
  }
}

}  // namespace

Combinator Combinator::from_connector(BinaryConnector op) {
  return from_formula(
      Formula::binary(op, Formula::atom(kNew), Formula::atom(kCur)));
}

Combinator Combinator::from_formula(Formula expr) {
  bool saw_new = false;
  bool saw_cur = false;
  validate(expr, saw_new, saw_cur);
  if (!saw_new || !saw_cur)
    throw Error(std::string("malformed combinator: placeholder ") +
                (saw_new ? "CUR" : "NEW") + " does not occur");
  return Combinator{std::move(expr)};
}

TruthValue Combinator::apply(TruthValue incoming, TruthValue current) const {
  VSet env;
  env.assign(Fact{kNew}, incoming);
  env.assign(Fact{kCur}, current);
  return evaluate(env, expr_);
}

Database standard_update(const Database& db, const VPair& pair) {
  Database out = db;
  out.extension.assign(pair.fact, pair.value);
  return out;
}

Database integrative_update(const Database& db, const VPair& pair,
                            const Combinator& combine) {
  Database out = db;
  const TruthValue current = out.extension.value_of(pair.fact);
  out.extension.assign(pair.fact, combine.apply(pair.value, current));
  return out;
}

}  // namespace fourval
