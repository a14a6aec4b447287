#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

/// Kernel of the four-valued logic FOUR: truth values, both lattice
/// orders, and evaluation tables for every connector the engine knows.
///
/// The four values are t (true only), b (both true and false), n
/// (neither), and f (false only).  They carry two partial orders:
///
///   knowledge order leq_k:   n below t and f, t and f below b
///   truth order     leq_t:   f below n and b, n and b below t
///
/// Both orders form lattices; the binary connectors are their joins
/// and meets (or/and for truth, oplus/otimes for knowledge), and every
/// pair of the four drawn from {or, and, oplus, otimes} distributes
/// over each other.  All tables below are exhaustively cross-checked
/// against algebraic definitions in the law suite (laws.hpp).
namespace fourval {

enum class TruthValue : std::uint8_t { t = 0, b = 1, n = 2, f = 3 };

/// A value is designated when it carries truth: t or b.
constexpr bool is_designated(TruthValue v) {
  return v == TruthValue::t || v == TruthValue::b;
}

constexpr char to_char(TruthValue v) {
  constexpr char names[4] = {'t', 'b', 'n', 'f'};
  return names[static_cast<std::size_t>(v)];
}

constexpr std::optional<TruthValue> value_from_char(char c) {
  switch (c) {
    case 't': return TruthValue::t;
    case 'b': return TruthValue::b;
    case 'n': return TruthValue::n;
    case 'f': return TruthValue::f;
    default: return std::nullopt;
  }
}

/// Unary connectors.  Neg is the involutive negation that fixes b and
/// n; Conf (conflation) mirrors the knowledge order; Compl is their
/// composition (classical complement, swaps b with n).  IsT..IsF test
/// for one specific value and answer two-valued t/f; NonValid answers
/// t exactly on the non-designated values.
enum class UnaryConnector : std::uint8_t {
  Neg,
  Conf,
  Compl,
  IsT,
  IsB,
  IsN,
  IsF,
  NonValid,
};

/// Binary connectors.  Or/And are the truth-order join and meet,
/// KJoin/KMeet (written (+) and (x)) the knowledge-order ones.  ODot
/// is the consensus-accumulating merge (x (o) y collects the conflict
/// already present in either side).  The five implications differ in
/// which antecedent values let the consequent through; ImpFde is the
/// one the engine uses for rule satisfaction.
enum class BinaryConnector : std::uint8_t {
  Or,
  And,
  KJoin,
  KMeet,
  ODot,
  ImpMat,
  ImpFde,
  ImpHook,
  ImpFdeStar,
  ImpHookStar,
};

namespace detail {

using Row = std::array<TruthValue, 4>;
using Table = std::array<Row, 4>;

constexpr TruthValue T = TruthValue::t;
constexpr TruthValue B = TruthValue::b;
constexpr TruthValue N = TruthValue::n;
constexpr TruthValue F = TruthValue::f;

// Unary tables, indexed by argument value in the order t, b, n, f.
constexpr Row kNeg = {F, B, N, T};
constexpr Row kConf = {B, T, F, N};
constexpr Row kCompl = {F, N, B, T};
constexpr Row kIsT = {T, F, F, F};
constexpr Row kIsB = {F, T, F, F};
constexpr Row kIsN = {F, F, T, F};
constexpr Row kIsF = {F, F, F, T};
constexpr Row kNonValid = {F, F, T, T};

// Binary tables: row = left argument, column = right argument.
constexpr Table kOr = {{
    {T, T, T, T},
    {T, B, T, B},
    {T, T, N, N},
    {T, B, N, F},
}};

constexpr Table kAnd = {{
    {T, B, N, F},
    {B, B, F, F},
    {N, F, N, F},
    {F, F, F, F},
}};

constexpr Table kKJoin = {{
    {T, B, T, B},
    {B, B, B, B},
    {T, B, N, F},
    {B, B, F, F},
}};

constexpr Table kKMeet = {{
    {T, T, N, N},
    {T, B, N, F},
    {N, N, N, N},
    {N, F, N, F},
}};

constexpr Table kODot = {{
    {T, B, N, N},
    {B, B, B, B},
    {N, B, N, N},
    {N, B, N, F},
}};

constexpr Table kImpMat = {{
    {T, B, N, F},
    {T, B, T, B},
    {T, T, N, N},
    {T, T, T, T},
}};

constexpr Table kImpFde = {{
    {T, B, N, F},
    {T, B, N, F},
    {T, T, T, T},
    {T, T, T, T},
}};

constexpr Table kImpHook = {{
    {T, B, N, F},
    {T, T, N, N},
    {T, B, T, B},
    {T, T, T, T},
}};

constexpr Table kImpFdeStar = {{
    {T, F, N, F},
    {T, B, N, F},
    {T, N, T, N},
    {T, T, T, T},
}};

constexpr Table kImpHookStar = {{
    {T, F, F, F},
    {T, T, F, F},
    {T, F, T, F},
    {T, T, T, T},
}};

// leq_k: n below everything, b above everything, t and f incomparable.
constexpr std::array<std::array<bool, 4>, 4> kLeqK = {{
    // columns t, b, n, f; row value <=k column value
    /* t */ {{true, true, false, false}},
    /* b */ {{false, true, false, false}},
    /* n */ {{true, true, true, true}},
    /* f */ {{false, true, false, true}},
}};

// leq_t: f below everything, t above everything, b and n incomparable.
constexpr std::array<std::array<bool, 4>, 4> kLeqT = {{
    /* t */ {{true, false, false, false}},
    /* b */ {{true, true, false, false}},
    /* n */ {{true, false, true, false}},
    /* f */ {{true, true, true, true}},
}};

}  // namespace detail

constexpr TruthValue eval_unary(UnaryConnector op, TruthValue v) {
  const auto i = static_cast<std::size_t>(v);
  switch (op) {
    case UnaryConnector::Neg: return detail::kNeg[i];
    case UnaryConnector::Conf: return detail::kConf[i];
    case UnaryConnector::Compl: return detail::kCompl[i];
    case UnaryConnector::IsT: return detail::kIsT[i];
    case UnaryConnector::IsB: return detail::kIsB[i];
    case UnaryConnector::IsN: return detail::kIsN[i];
    case UnaryConnector::IsF: return detail::kIsF[i];
    case UnaryConnector::NonValid: return detail::kNonValid[i];
  }
  return TruthValue::n;  // unreachable
}

constexpr TruthValue eval_binary(BinaryConnector op, TruthValue a, TruthValue b) {
  const auto i = static_cast<std::size_t>(a);
  const auto j = static_cast<std::size_t>(b);
  switch (op) {
    case BinaryConnector::Or: return detail::kOr[i][j];
    case BinaryConnector::And: return detail::kAnd[i][j];
    case BinaryConnector::KJoin: return detail::kKJoin[i][j];
    case BinaryConnector::KMeet: return detail::kKMeet[i][j];
    case BinaryConnector::ODot: return detail::kODot[i][j];
    case BinaryConnector::ImpMat: return detail::kImpMat[i][j];
    case BinaryConnector::ImpFde: return detail::kImpFde[i][j];
    case BinaryConnector::ImpHook: return detail::kImpHook[i][j];
    case BinaryConnector::ImpFdeStar: return detail::kImpFdeStar[i][j];
    case BinaryConnector::ImpHookStar: return detail::kImpHookStar[i][j];
  }
  return TruthValue::n;  // unreachable
}

/// Knowledge order: a leq_k b when b carries at least the information of a.
constexpr bool leq_k(TruthValue a, TruthValue b) {
  return detail::kLeqK[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

/// Truth order: a leq_t b when b is at least as true as a.
constexpr bool leq_t(TruthValue a, TruthValue b) {
  return detail::kLeqT[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

/// Knowledge-order join, the fold used when several rule firings meet.
constexpr TruthValue k_join(TruthValue a, TruthValue b) {
  return eval_binary(BinaryConnector::KJoin, a, b);
}

constexpr std::array<TruthValue, 4> all_values() {
  return {TruthValue::t, TruthValue::b, TruthValue::n, TruthValue::f};
}

std::string_view unary_name(UnaryConnector op);
std::string_view binary_name(BinaryConnector op);

}  // namespace fourval
