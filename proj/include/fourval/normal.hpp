#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fourval/formula.hpp"

/// The |(+)-normal form and the syntactic rule-safety check built on it.
///
/// Shape, outermost first:  | over oplus-groups;  (+) over blocks inside
/// a group;  each block is & over (x)-groups of literals.  The blocks
/// (the |- and (+)-free subformulas) are what the safety criterion
/// quantifies over.
namespace fourval {

struct Literal {
  bool negated = false;
  Atom atom;
};

/// Literals joined by (x).
struct OtimesGroup {
  std::vector<Literal> literals;
};

/// (x)-groups joined by &; a |- and (+)-free subformula.
struct Block {
  std::vector<OtimesGroup> groups;

  std::set<std::string> variables() const;
};

/// Blocks joined by (+).
struct OplusGroup {
  std::vector<Block> blocks;
};

struct NormalForm {
  std::vector<OplusGroup> disjuncts;  // joined by |

  std::size_t block_count() const;
};

Formula literal_formula(const Literal& lit);
Formula block_formula(const Block& block);
Formula normal_form_formula(const NormalForm& nf);

/// Default cap on nodes materialized during distribution.
inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Pushes negation down to atoms (De Morgan over |/&, straight
/// distribution over (+)/(x)).  Input must stay in the body fragment;
/// other connectors raise RuleError.
Formula to_nnf(const Formula& f);

/// Full |(+)-normal form by distribution, in order: | to the top, then
/// (+) within each disjunct, then & over (x) within each block.  No
/// algebraic simplification is applied.  Throws ResourceLimitError when
/// the expansion exceeds `node_budget` created nodes.
NormalForm normalize(const Formula& f, std::size_t node_budget = kDefaultNodeBudget);

struct SafetyReport {
  bool safe = true;
  // First violating block when unsafe:
  std::size_t disjunct_index = 0;
  std::size_t block_index = 0;
  std::string block_text;
  std::set<std::string> missing_variables;
};

/// A rule is safe iff every block of its body's normal form contains
/// all head variables.
SafetyReport is_safe(const Rule& rule,
                     std::size_t node_budget = kDefaultNodeBudget);

}  // namespace fourval
