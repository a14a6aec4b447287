#include "fourval/normal.hpp"

#include <utility>

#include "fourval/serialize.hpp"

namespace fourval {

namespace {

Formula fold(BinaryConnector op, const std::vector<Formula>& parts) {
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = Formula::binary(op, acc, parts[i]);
  return acc;
}

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return negated ? Formula::unary(UnaryConnector::Neg, f) : f;
    case Formula::Kind::Unary:
      if (f.unary_op() != UnaryConnector::Neg)
        throw RuleError(std::string("connector ") +
                        std::string(unary_name(f.unary_op())) +
                        " is outside the normal-form fragment");
      return nnf(f.child(), !negated);
    case Formula::Kind::Binary: {
      const BinaryConnector op = f.binary_op();
      switch (op) {
        case BinaryConnector::Or:
        case BinaryConnector::And: {
          // De Morgan: negation swaps | and &.
          const BinaryConnector out =
              !negated ? op
                       : (op == BinaryConnector::Or ? BinaryConnector::And
                                                    : BinaryConnector::Or);
          return Formula::binary(out, nnf(f.lhs(), negated), nnf(f.rhs(), negated));
        }
        case BinaryConnector::KJoin:
        case BinaryConnector::KMeet:
          // Negation passes through (+) and (x) unchanged.
          return Formula::binary(op, nnf(f.lhs(), negated), nnf(f.rhs(), negated));
        default:
          throw RuleError(std::string("connector ") +
                          std::string(binary_name(op)) +
                          " is outside the normal-form fragment");
      }
    }
  }
  throw RuleError("malformed formula node");
}

struct Budget {
  std::size_t limit;
  std::size_t used = 0;

  void charge(std::size_t n) {
    used += n;
    if (used > limit)
      throw ResourceLimitError("normal-form expansion exceeded the node budget of " +
                               std::to_string(limit) + " nodes");
  }
};

struct Counted {
  Formula formula;
  std::size_t nodes;
};

bool contains(std::initializer_list<BinaryConnector> set, BinaryConnector op) {
  for (BinaryConnector c : set)
    if (c == op) return true;
  return false;
}

/// Splits `f` into parts joined by `op`, distributing `op` outward over
/// every connector in `through` (all four are mutually distributive and
/// commutative, so (l1 op l2) through r expands to a full cross product).
std::vector<Counted> split(const Formula& f, BinaryConnector op,
                           std::initializer_list<BinaryConnector> through,
                           Budget& budget) {
  if (f.kind() == Formula::Kind::Binary) {
    const BinaryConnector fop = f.binary_op();
    if (fop == op) {
      auto parts = split(f.lhs(), op, through, budget);
      auto right = split(f.rhs(), op, through, budget);
      parts.insert(parts.end(), std::make_move_iterator(right.begin()),
                   std::make_move_iterator(right.end()));
      return parts;
    }
    if (contains(through, fop)) {
      const auto left = split(f.lhs(), op, through, budget);
      const auto right = split(f.rhs(), op, through, budget);
      std::vector<Counted> out;
      out.reserve(left.size() * right.size());
      for (const Counted& l : left)
        for (const Counted& r : right) {
          const std::size_t nodes = l.nodes + r.nodes + 1;
          budget.charge(nodes);
          out.push_back({Formula::binary(fop, l.formula, r.formula), nodes});
        }
      return out;
    }
  }
  return {Counted{f, f.node_count()}};
}

Literal to_literal(const Formula& f) {
  if (f.kind() == Formula::Kind::Atom) return Literal{false, f.atom_ref()};
  if (f.kind() == Formula::Kind::Unary && f.unary_op() == UnaryConnector::Neg &&
      f.child().kind() == Formula::Kind::Atom)
    return Literal{true, f.child().atom_ref()};
  throw RuleError("normal form reached a non-literal leaf");
}

}  // namespace

std::set<std::string> Block::variables() const {
  std::set<std::string> out;
  for (const OtimesGroup& g : groups)
    for (const Literal& lit : g.literals)
      for (const Term& t : lit.atom.args)
        if (t.is_variable()) out.insert(t.text);
  return out;
}

std::size_t NormalForm::block_count() const {
  std::size_t n = 0;
  for (const OplusGroup& g : disjuncts) n += g.blocks.size();
  return n;
}

Formula literal_formula(const Literal& lit) {
  Formula f = Formula::atom(lit.atom);
  return lit.negated ? Formula::unary(UnaryConnector::Neg, f) : f;
}

Formula block_formula(const Block& block) {
  std::vector<Formula> groups;
  groups.reserve(block.groups.size());
  for (const OtimesGroup& g : block.groups) {
    std::vector<Formula> lits;
    lits.reserve(g.literals.size());
    for (const Literal& lit : g.literals) lits.push_back(literal_formula(lit));
    groups.push_back(fold(BinaryConnector::KMeet, lits));
  }
  return fold(BinaryConnector::And, groups);
}

Formula normal_form_formula(const NormalForm& nf) {
  std::vector<Formula> disjuncts;
  disjuncts.reserve(nf.disjuncts.size());
  for (const OplusGroup& og : nf.disjuncts) {
    std::vector<Formula> blocks;
    blocks.reserve(og.blocks.size());
    for (const Block& blk : og.blocks) blocks.push_back(block_formula(blk));
    disjuncts.push_back(fold(BinaryConnector::KJoin, blocks));
  }
  return fold(BinaryConnector::Or, disjuncts);
}

Formula to_nnf(const Formula& f) { return nnf(f, false); }

NormalForm normalize(const Formula& f, std::size_t node_budget) {
  Budget budget{node_budget};
  const Formula base = to_nnf(f);

  NormalForm nf;
  for (const Counted& disjunct :
       split(base, BinaryConnector::Or,
             {BinaryConnector::And, BinaryConnector::KJoin, BinaryConnector::KMeet},
             budget)) {
    OplusGroup og;
    for (const Counted& block_part :
         split(disjunct.formula, BinaryConnector::KJoin,
               {BinaryConnector::And, BinaryConnector::KMeet}, budget)) {
      Block block;
      for (const Counted& group_part :
           split(block_part.formula, BinaryConnector::And,
                 {BinaryConnector::KMeet}, budget)) {
        OtimesGroup group;
        for (const Counted& lit_part :
             split(group_part.formula, BinaryConnector::KMeet, {}, budget))
          group.literals.push_back(to_literal(lit_part.formula));
        block.groups.push_back(std::move(group));
      }
      og.blocks.push_back(std::move(block));
    }
    nf.disjuncts.push_back(std::move(og));
  }
  return nf;
}

SafetyReport is_safe(const Rule& rule, std::size_t node_budget) {
  std::set<std::string> head_vars;
  for (const Term& t : rule.head.args)
    if (t.is_variable()) head_vars.insert(t.text);

  const NormalForm nf = normalize(rule.body, node_budget);
  for (std::size_t i = 0; i < nf.disjuncts.size(); ++i) {
    const OplusGroup& og = nf.disjuncts[i];
    for (std::size_t j = 0; j < og.blocks.size(); ++j) {
      const auto block_vars = og.blocks[j].variables();
      std::set<std::string> missing;
      for (const std::string& v : head_vars)
        if (!block_vars.contains(v)) missing.insert(v);
      if (!missing.empty()) {
        SafetyReport report;
        report.safe = false;
        report.disjunct_index = i;
        report.block_index = j;
        report.block_text = serialize(block_formula(og.blocks[j]));
        report.missing_variables = std::move(missing);
        return report;
      }
    }
  }
  return SafetyReport{};
}

}  // namespace fourval
