#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fourval/errors.hpp"
#include "fourval/truth.hpp"

/// Abstract syntax: terms, atoms, facts, formulas, rules, and v-sets,
/// together with valuation of ground formulas against a v-set.
namespace fourval {

struct Term {
  enum class Kind : std::uint8_t { Constant, Variable };

  static Term constant(std::string symbol) {
    return Term{Kind::Constant, std::move(symbol)};
  }
  static Term variable(std::string name) {
    return Term{Kind::Variable, std::move(name)};
  }

  bool is_variable() const { return kind == Kind::Variable; }

  Kind kind = Kind::Constant;
  std::string text;

  auto operator<=>(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  std::size_t arity() const { return args.size(); }

  auto operator<=>(const Atom&) const = default;
};

/// A ground atom.  The constructor enforces groundness.
class Fact {
 public:
  explicit Fact(Atom atom);

  const Atom& atom() const { return atom_; }
  const std::string& predicate() const { return atom_.predicate; }

  auto operator<=>(const Fact&) const = default;

 private:
  Atom atom_;
};

/// Immutable formula tree over atoms; connectors come from the kernel.
/// Copies share structure, so passing formulas around is cheap.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Unary, Binary };

  static Formula atom(fourval::Atom a);
  static Formula unary(UnaryConnector op, Formula f);
  static Formula binary(BinaryConnector op, Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const fourval::Atom& atom_ref() const { return node_->atom; }
  UnaryConnector unary_op() const { return node_->uop; }
  BinaryConnector binary_op() const { return node_->bop; }
  Formula child() const { return Formula{node_->lhs}; }
  Formula lhs() const { return Formula{node_->lhs}; }
  Formula rhs() const { return Formula{node_->rhs}; }

  std::set<std::string> free_variables() const;
  std::size_t node_count() const;

  bool operator==(const Formula& other) const;

 private:
  struct Node {
    Kind kind;
    fourval::Atom atom;        // Kind::Atom
    UnaryConnector uop{};      // Kind::Unary
    BinaryConnector bop{};     // Kind::Binary
    std::shared_ptr<const Node> lhs;  // child for unary
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Finite, consistent partial valuation: every stored fact maps to one
/// value, and n is never stored (absence already means n).
class VSet {
 public:
  using Entries = std::map<Fact, TruthValue>;

  VSet() = default;

  /// Stored value, or n when the fact is absent.
  TruthValue value_of(const Fact& fact) const;

  /// Insert/replace; assigning n removes the entry.
  void assign(const Fact& fact, TruthValue v);

  /// Insert refusing conflicts: a second value for the same fact throws
  /// InconsistentExtensionError; n throws Error (not storable).
  void insert_checked(const Fact& fact, TruthValue v);

  bool contains(const Fact& fact) const { return entries_.contains(fact); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Entry-wise inclusion (same fact, same value).
  bool subset_of(const VSet& other) const;

  Entries::const_iterator begin() const { return entries_.begin(); }
  Entries::const_iterator end() const { return entries_.end(); }

  bool operator==(const VSet&) const = default;
  bool operator<(const VSet& other) const { return entries_ < other.entries_; }

 private:
  Entries entries_;
};

/// Deductive rule: positive or negative head literal over a body drawn
/// from the connectors {~, |, &, (+), (x)}.
struct Rule {
  bool negative_head = false;
  Atom head;
  Formula body;
};

/// True when the formula only uses rule-body connectors.
bool in_body_fragment(const Formula& f);

/// Validating constructor for Rule; throws RuleError on a body outside
/// the fragment or a head variable that the body does not bind.
Rule make_rule(bool negative_head, Atom head, Formula body);

TruthValue valuate(const VSet& s, const Fact& fact);

/// Bottom-up evaluation of a ground formula; throws EvalError if a
/// variable remains.
TruthValue evaluate(const VSet& s, const Formula& f);

/// Replaces variables by constants; throws EvalError when a free
/// variable has no binding.
Formula substitute(const Formula& f, const std::map<std::string, Term>& binding);

/// Pointwise comparisons over the union of mentioned facts; facts absent
/// from both sides are n on both and never violate either order.
bool vset_leq_k(const VSet& s1, const VSet& s2);
bool vset_leq_t(const VSet& s1, const VSet& s2);

}  // namespace fourval
