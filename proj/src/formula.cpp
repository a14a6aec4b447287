#include "fourval/formula.hpp"

#include <algorithm>

namespace fourval {

bool Atom::is_ground() const {
  return std::none_of(args.begin(), args.end(),
                      [](const Term& t) { return t.is_variable(); });
}

Fact::Fact(Atom atom) : atom_(std::move(atom)) {
  if (!atom_.is_ground())
    throw EvalError("fact " + atom_.predicate + " contains a variable");
}

Formula Formula::atom(fourval::Atom a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->atom = std::move(a);
  return Formula{std::move(node)};
}

Formula Formula::unary(UnaryConnector op, Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Unary;
  node->uop = op;
  node->lhs = std::move(f.node_);
  return Formula{std::move(node)};
}

Formula Formula::binary(BinaryConnector op, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Binary;
  node->bop = op;
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Formula{std::move(node)};
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f.atom_ref().args)
        if (t.is_variable()) out.insert(t.text);
      return;
    case Formula::Kind::Unary:
      collect_variables(f.child(), out);
      return;
    case Formula::Kind::Binary:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
      return;
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> out;
  collect_variables(*this, out);
  return out;
}

std::size_t Formula::node_count() const {
  switch (kind()) {
    case Kind::Atom: return 1;
    case Kind::Unary: return 1 + child().node_count();
    case Kind::Binary: return 1 + lhs().node_count() + rhs().node_count();
  }
  return 0;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Atom: return atom_ref() == other.atom_ref();
    case Kind::Unary:
      return unary_op() == other.unary_op() && child() == other.child();
    case Kind::Binary:
      return binary_op() == other.binary_op() && lhs() == other.lhs() &&
             rhs() == other.rhs();
  }
  return false;
}

TruthValue VSet::value_of(const Fact& fact) const {
  const auto it = entries_.find(fact);
  return it == entries_.end() ? TruthValue::n : it->second;
}

void VSet::assign(const Fact& fact, TruthValue v) {
  if (v == TruthValue::n)
    entries_.erase(fact);
  else
    entries_.insert_or_assign(fact, v);
}

void VSet::insert_checked(const Fact& fact, TruthValue v) {
  if (v == TruthValue::n)
    throw Error("value n is not storable in a v-set");
  const auto [it, inserted] = entries_.emplace(fact, v);
  if (!inserted && it->second != v)
    throw InconsistentExtensionError(
        "conflicting values for the same fact: " + fact.predicate() + " has " +
        std::string(1, to_char(it->second)) + " and " + std::string(1, to_char(v)));
}

bool VSet::subset_of(const VSet& other) const {
  return std::all_of(begin(), end(), [&](const auto& entry) {
    return other.value_of(entry.first) == entry.second;
  });
}

bool in_body_fragment(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return true;
    case Formula::Kind::Unary:
      return f.unary_op() == UnaryConnector::Neg && in_body_fragment(f.child());
    case Formula::Kind::Binary:
      switch (f.binary_op()) {
        case BinaryConnector::Or:
        case BinaryConnector::And:
        case BinaryConnector::KJoin:
        case BinaryConnector::KMeet:
          return in_body_fragment(f.lhs()) && in_body_fragment(f.rhs());
        default: return false;
      }
  }
  return false;
}

Rule make_rule(bool negative_head, Atom head, Formula body) {
  if (!in_body_fragment(body))
    throw RuleError("rule body for " + head.predicate +
                    " uses a connector outside {~, |, &, (+), (x)}");
  const auto body_vars = body.free_variables();
  for (const Term& t : head.args)
    if (t.is_variable() && !body_vars.contains(t.text))
      throw RuleError("head variable ?" + t.text + " of " + head.predicate +
                      " does not occur in the body");
  return Rule{negative_head, std::move(head), std::move(body)};
}

TruthValue valuate(const VSet& s, const Fact& fact) { return s.value_of(fact); }

TruthValue evaluate(const VSet& s, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return s.value_of(Fact{f.atom_ref()});
    case Formula::Kind::Unary:
      return eval_unary(f.unary_op(), evaluate(s, f.child()));
    case Formula::Kind::Binary:
      return eval_binary(f.binary_op(), evaluate(s, f.lhs()), evaluate(s, f.rhs()));
  }
  throw EvalError("malformed formula node");
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& binding) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      Atom atom = f.atom_ref();
      for (Term& t : atom.args) {
        if (!t.is_variable()) continue;
        const auto it = binding.find(t.text);
        if (it == binding.end())
          throw EvalError("variable ?" + t.text + " is unbound");
        t = it->second;
      }
      return Formula::atom(std::move(atom));
    }
    case Formula::Kind::Unary:
      return Formula::unary(f.unary_op(), substitute(f.child(), binding));
    case Formula::Kind::Binary:
      return Formula::binary(f.binary_op(), substitute(f.lhs(), binding),
                             substitute(f.rhs(), binding));
  }
  throw EvalError("malformed formula node");
}

namespace {

bool pointwise(const VSet& s1, const VSet& s2, bool (*leq)(TruthValue, TruthValue)) {
  for (const auto& [fact, v] : s1)
    if (!leq(v, s2.value_of(fact))) return false;
  for (const auto& [fact, v] : s2)
    if (!s1.contains(fact) && !leq(TruthValue::n, v)) return false;
  return true;
}

}  // namespace

bool vset_leq_k(const VSet& s1, const VSet& s2) { return pointwise(s1, s2, leq_k); }
bool vset_leq_t(const VSet& s1, const VSet& s2) { return pointwise(s1, s2, leq_t); }

}  // namespace fourval
