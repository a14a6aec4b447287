#include "fourval/synthesis.hpp"

#include <string>

#include "fourval/errors.hpp"

namespace fourval {

namespace {

Atom prop_atom(std::size_t i) { return Atom{"P" + std::to_string(i + 1), {}}; }

UnaryConnector detector_for(TruthValue v) {
  switch (v) {
    case TruthValue::t: return UnaryConnector::IsT;
    case TruthValue::b: return UnaryConnector::IsB;
    case TruthValue::n: return UnaryConnector::IsN;
    case TruthValue::f: return UnaryConnector::IsF;
  }
  return UnaryConnector::IsT;
}

/// Always-f formula used for an empty disjunction: T(P1) & F(P1).
Formula constant_false() {
  const Formula p1 = Formula::atom(prop_atom(0));
  return Formula::binary(BinaryConnector::And,
                         Formula::unary(UnaryConnector::IsT, p1),
                         Formula::unary(UnaryConnector::IsF, p1));
}

Formula disjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return constant_false();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = Formula::binary(BinaryConnector::Or, acc, parts[i]);
  return acc;
}

}  // namespace

TruthFunction::TruthFunction(std::size_t arity, std::vector<TruthValue> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity_ < 1) throw Error("truth function arity must be at least 1");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < arity_; ++i) expected *= 4;
  if (table_.size() != expected)
    throw Error("truth function table has " + std::to_string(table_.size()) +
                " entries; arity " + std::to_string(arity_) + " needs " +
                std::to_string(expected));
}

TruthFunction TruthFunction::from_unary(UnaryConnector op) {
  std::vector<TruthValue> table;
  for (TruthValue v : all_values()) table.push_back(eval_unary(op, v));
  return TruthFunction{1, std::move(table)};
}

TruthFunction TruthFunction::from_binary(BinaryConnector op) {
  std::vector<TruthValue> table;
  for (TruthValue a : all_values())
    for (TruthValue b : all_values()) table.push_back(eval_binary(op, a, b));
  return TruthFunction{2, std::move(table)};
}

TruthValue TruthFunction::value_at(const std::vector<TruthValue>& tuple) const {
  if (tuple.size() != arity_)
    throw Error("tuple arity mismatch in truth-function lookup");
  return table_[index_for_tuple(tuple)];
}

std::size_t TruthFunction::index_for_tuple(const std::vector<TruthValue>& tuple) {
  std::size_t index = 0;
  for (TruthValue v : tuple) index = index * 4 + static_cast<std::size_t>(v);
  return index;
}

std::vector<TruthValue> TruthFunction::tuple_for_index(std::size_t index,
                                                       std::size_t arity) {
  std::vector<TruthValue> tuple(arity, TruthValue::t);
  for (std::size_t i = arity; i-- > 0;) {
    tuple[i] = static_cast<TruthValue>(index % 4);
    index /= 4;
  }
  return tuple;
}

Formula phi_for_tuple(const std::vector<TruthValue>& tuple) {
  if (tuple.empty()) throw Error("detector formula needs at least one value");
  Formula acc =
      Formula::unary(detector_for(tuple[0]), Formula::atom(prop_atom(0)));
  for (std::size_t i = 1; i < tuple.size(); ++i)
    acc = Formula::binary(
        BinaryConnector::And, acc,
        Formula::unary(detector_for(tuple[i]), Formula::atom(prop_atom(i))));
  return acc;
}

Formula synthesize(const TruthFunction& w) {
  std::vector<std::vector<Formula>> preimage(4);
  for (std::size_t index = 0; index < w.table_size(); ++index) {
    const TruthValue out = w.value_at_index(index);
    preimage[static_cast<std::size_t>(out)].push_back(
        phi_for_tuple(TruthFunction::tuple_for_index(index, w.arity())));
  }

  const Formula phi_t = disjunction(preimage[static_cast<std::size_t>(TruthValue::t)]);
  const Formula phi_b = disjunction(preimage[static_cast<std::size_t>(TruthValue::b)]);
  const Formula phi_n = disjunction(preimage[static_cast<std::size_t>(TruthValue::n)]);
  const Formula phi_f = disjunction(preimage[static_cast<std::size_t>(TruthValue::f)]);

  const Formula left = Formula::binary(
      BinaryConnector::KMeet,
      Formula::binary(BinaryConnector::Or, phi_t,
                      Formula::unary(UnaryConnector::Neg, phi_f)),
      Formula::unary(UnaryConnector::Compl,
                     Formula::unary(UnaryConnector::Conf, phi_n)));
  return Formula::binary(BinaryConnector::KJoin, left,
                         Formula::unary(UnaryConnector::Conf, phi_b));
}

bool verify_synthesis(const TruthFunction& w, std::size_t max_arity) {
  if (w.arity() > max_arity)
    throw ResourceLimitError("synthesis verification bound is arity " +
                             std::to_string(max_arity) + ", function has " +
                             std::to_string(w.arity()));
  const Formula formula = synthesize(w);
  for (std::size_t index = 0; index < w.table_size(); ++index) {
    const auto tuple = TruthFunction::tuple_for_index(index, w.arity());
    VSet assignment;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      assignment.assign(Fact{Atom{"P" + std::to_string(i + 1), {}}}, tuple[i]);
    if (evaluate(assignment, formula) != w.value_at_index(index)) return false;
  }
  return true;
}

}  // namespace fourval
