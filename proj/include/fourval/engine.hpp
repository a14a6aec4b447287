#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fourval/formula.hpp"
#include "fourval/normal.hpp"

/// Database model and fixpoint semantics.
///
/// One fixpoint round applies every ground rule instance whose head
/// fact is not stored in the extension: a body evaluating to t or b
/// (designated) contributes the corresponding value to its head — t or
/// b through a positive head, f or b through a negative head — and all
/// contributions for one fact merge with (+), the knowledge join.
/// Bodies evaluating to n or f contribute nothing.  Iteration from the
/// extension climbs the knowledge order pointwise and therefore stops
/// after at most 2·|AB| + 1 rounds.
namespace fourval {

struct Database {
  VSet extension;
  std::vector<Rule> rules;
};

using ActiveDomain = std::set<std::string>;

/// Optional extra grounding constants.  When present, grounding uses
/// the active domain extended by these constants and skips the safety
/// requirement (the way to observe an unsafe rule's behavior).
using Universe = std::optional<std::set<std::string>>;

/// All constants occurring in the extension or the rules.
ActiveDomain active_domain(const Database& db);

/// |AB|: facts over the database's predicates with active-domain
/// arguments, counted without materializing (saturates at 2^63-1).
std::size_t active_herbrand_base_size(const Database& db);

/// Materializes AB sorted; throws ResourceLimitError beyond 10^6 facts.
std::vector<Fact> active_herbrand_base(const Database& db);

struct GroundRule {
  bool negative_head = false;
  Fact head;
  Formula body;
};

/// Every substitution of rule variables by grounding constants whose
/// head fact is NOT mapped in the extension (the extension wins over
/// rules).  Without an explicit universe, an unsafe rule raises
/// UnsafeRuleError naming the violating block.
std::vector<GroundRule> ground_rules(const Database& db, const Universe& universe = {});

/// One expansion round before merging: the entries of s plus one
/// (fact, value) contribution per ground rule with designated body.
std::vector<std::pair<Fact, TruthValue>> gamma_step(const Database& db, const VSet& s,
                                                    const Universe& universe = {});

/// One full operator application: gamma contributions folded per fact
/// with (+).
VSet sigma_step(const Database& db, const VSet& s, const Universe& universe = {});

struct SemanticsOptions {
  std::size_t max_iters = 0;  // 0: automatic cap 2|AB|+2 (diagnostic)
  bool keep_trace = false;
  Universe universe;
};

struct SemanticsResult {
  VSet fixpoint;
  std::size_t iterations = 0;  // least n with step n unchanged
  std::vector<VSet> trace;     // filled when keep_trace: steps 0..iterations
};

/// Least fixpoint reached by iterating from the extension.
SemanticsResult semantics(const Database& db, const SemanticsOptions& options = {});

/// True iff m contains the extension entry-wise and every ground rule
/// instance, read as body -> head-literal (negated fact for a negative
/// head), evaluates in m to a designated value.
bool is_model(const Database& db, const VSet& m, const Universe& universe = {});

/// Enumerates all 4^|AB| candidate v-sets over the active Herbrand
/// base, keeps the models, and returns the subset-minimal ones sorted.
/// Refuses when |AB| exceeds max_base.
std::vector<VSet> minimal_models_bruteforce(const Database& db,
                                            std::size_t max_base = 8);

struct QueryRow {
  std::vector<std::pair<std::string, std::string>> binding;  // var, constant
  TruthValue value = TruthValue::n;
};

struct QueryResult {
  bool ground = true;
  TruthValue value = TruthValue::n;  // ground case
  std::vector<QueryRow> rows;        // open case
};

/// Evaluates a formula against an already-computed fixpoint; open
/// formulas enumerate bindings over the given constants, omitting
/// n-valued rows unless include_unknown.
QueryResult query_vset(const VSet& fixpoint, const ActiveDomain& constants,
                       const Formula& f, bool include_unknown = false);

/// Convenience: semantics, then query_vset over the active domain.
QueryResult query(const Database& db, const Formula& f,
                  const SemanticsOptions& options = {},
                  bool include_unknown = false);

}  // namespace fourval
