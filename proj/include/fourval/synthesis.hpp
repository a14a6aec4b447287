#pragma once

#include <cstddef>
#include <vector>

#include "fourval/formula.hpp"

/// Compiles an arbitrary k-ary truth function into a formula over the
/// nullary atoms P1..Pk using only basic connectors (no implication):
/// one two-valued detector formula per input tuple, one disjunction per
/// output value, assembled as ((Phi_t | ~Phi_f) (x) compl conf Phi_n)
/// (+) conf Phi_b.
namespace fourval {

class TruthFunction {
 public:
  /// table[i] is the output for the i-th tuple; tuples are indexed in
  /// base 4, first argument most significant, digit order t,b,n,f.
  TruthFunction(std::size_t arity, std::vector<TruthValue> table);

  static TruthFunction from_unary(UnaryConnector op);
  static TruthFunction from_binary(BinaryConnector op);

  std::size_t arity() const { return arity_; }
  std::size_t table_size() const { return table_.size(); }
  TruthValue value_at_index(std::size_t index) const { return table_.at(index); }
  TruthValue value_at(const std::vector<TruthValue>& tuple) const;

  static std::size_t index_for_tuple(const std::vector<TruthValue>& tuple);
  static std::vector<TruthValue> tuple_for_index(std::size_t index,
                                                 std::size_t arity);

 private:
  std::size_t arity_;
  std::vector<TruthValue> table_;
};

/// Two-valued detector: t exactly at the given tuple, f elsewhere.
Formula phi_for_tuple(const std::vector<TruthValue>& tuple);

/// The synthesized formula; matches the function on every tuple when
/// P1..Pk are valuated by the tuple (absent stands for n).
Formula synthesize(const TruthFunction& w);

/// Exhaustive check of synthesize against the table; refuses arities
/// above max_arity.
bool verify_synthesis(const TruthFunction& w, std::size_t max_arity = 3);

}  // namespace fourval
