#pragma once

#include "fourval/engine.hpp"
#include "fourval/formula.hpp"

/// Extension updates.  A standard update overwrites (or, with value n,
/// removes) one stored pair.  An integrative update instead combines
/// the incoming value with the stored one through a two-placeholder
/// expression and stores the combined result; rules are never touched.
namespace fourval {

/// An incoming pair; value n is allowed and encodes deletion.
struct VPair {
  Fact fact;
  TruthValue value;
};

/// Binary expression over the reserved nullary atoms NEW and CUR with
/// connectors from {~, |, &, (+), (x), (o)}.
class Combinator {
 public:
  /// NEW <op> CUR for op in {|, &, (+), (x), (o)}.
  static Combinator from_connector(BinaryConnector op);

  /// Validates an arbitrary expression: every leaf must be NEW or CUR,
  /// both must occur, and connectors stay in the set above.
  static Combinator from_formula(Formula expr);

  TruthValue apply(TruthValue incoming, TruthValue current) const;

  const Formula& expr() const { return expr_; }

 private:
  explicit Combinator(Formula f) : expr_(std::move(f)) {}
  Formula expr_;
};

/// Def-style overwrite: value n removes the entry, anything else
/// replaces or inserts it.
Database standard_update(const Database& db, const VPair& pair);

/// Stores combine(incoming, current); a combined value of n removes
/// the entry.
Database integrative_update(const Database& db, const VPair& pair,
                            const Combinator& combine);

}  // namespace fourval
