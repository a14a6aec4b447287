#include "fourval/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "fourval/serialize.hpp"

namespace fourval {

namespace {

void collect_atom_constants(const Atom& atom, std::set<std::string>& out) {
  for (const Term& t : atom.args)
    if (!t.is_variable()) out.insert(t.text);
}

void collect_formula_constants(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: collect_atom_constants(f.atom_ref(), out); return;
    case Formula::Kind::Unary: collect_formula_constants(f.child(), out); return;
    case Formula::Kind::Binary:
      collect_formula_constants(f.lhs(), out);
      collect_formula_constants(f.rhs(), out);
      return;
  }
}

void collect_formula_predicates(const Formula& f,
                                std::map<std::string, std::size_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.emplace(f.atom_ref().predicate, f.atom_ref().arity());
      return;
    case Formula::Kind::Unary: collect_formula_predicates(f.child(), out); return;
    case Formula::Kind::Binary:
      collect_formula_predicates(f.lhs(), out);
      collect_formula_predicates(f.rhs(), out);
      return;
  }
}

/// Predicate name -> arity over extension and rules.
std::map<std::string, std::size_t> predicates(const Database& db) {
  std::map<std::string, std::size_t> out;
  for (const auto& [fact, value] : db.extension)
    out.emplace(fact.atom().predicate, fact.atom().arity());
  for (const Rule& r : db.rules) {
    out.emplace(r.head.predicate, r.head.arity());
    collect_formula_predicates(r.body, out);
  }
  return out;
}

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max() / 2;

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kSaturated / base) return kSaturated;
    result *= base;
  }
  return result;
}

/// Enumerates all assignments of `vars` over `constants` (sorted order)
/// and invokes fn with each complete binding.
template <typename Fn>
void for_each_binding(const std::vector<std::string>& vars,
                      const std::vector<std::string>& constants, Fn&& fn) {
  std::map<std::string, Term> binding;
  if (vars.empty()) {
    fn(binding);
    return;
  }
  if (constants.empty()) return;
  std::vector<std::size_t> odometer(vars.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      binding.insert_or_assign(vars[i], Term::constant(constants[odometer[i]]));
    fn(binding);
    std::size_t pos = vars.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < constants.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return;
    }
  }
}

TruthValue head_contribution(bool negative_head, TruthValue body_value) {
  if (!negative_head) return body_value;  // t -> t, b -> b
  return body_value == TruthValue::t ? TruthValue::f : TruthValue::b;
}

void gamma_contributions(const std::vector<GroundRule>& rules, const VSet& s,
                         std::vector<std::pair<Fact, TruthValue>>& out) {
  for (const GroundRule& gr : rules) {
    const TruthValue body_value = evaluate(s, gr.body);
    if (!is_designated(body_value)) continue;
    out.emplace_back(gr.head, head_contribution(gr.negative_head, body_value));
  }
}

VSet sigma_of(const std::vector<GroundRule>& rules, const VSet& s) {
  std::vector<std::pair<Fact, TruthValue>> gamma;
  for (const auto& entry : s) gamma.push_back(entry);
  gamma_contributions(rules, s, gamma);
  VSet out;
  for (const auto& [fact, value] : gamma)
    out.assign(fact, k_join(out.value_of(fact), value));
  return out;
}

Formula head_literal(const GroundRule& gr) {
  Formula head = Formula::atom(gr.head.atom());
  return gr.negative_head ? Formula::unary(UnaryConnector::Neg, head) : head;
}

bool rules_valid_in(const std::vector<GroundRule>& rules, const VSet& m) {
  return std::all_of(rules.begin(), rules.end(), [&](const GroundRule& gr) {
    const Formula imp =
        Formula::binary(BinaryConnector::ImpFde, gr.body, head_literal(gr));
    return is_designated(evaluate(m, imp));
  });
}

}  // namespace

ActiveDomain active_domain(const Database& db) {
  ActiveDomain out;
  for (const auto& [fact, value] : db.extension)
    collect_atom_constants(fact.atom(), out);
  for (const Rule& r : db.rules) {
    collect_atom_constants(r.head, out);
    collect_formula_constants(r.body, out);
  }
  return out;
}

namespace {

std::size_t base_size_over(const Database& db, std::size_t domain) {
  std::size_t total = 0;
  for (const auto& [name, arity] : predicates(db)) {
    const std::size_t count = saturating_pow(domain, arity);
    if (total > kSaturated - count) return kSaturated;
    total += count;
  }
  return total;
}

}  // namespace

std::size_t active_herbrand_base_size(const Database& db) {
  return base_size_over(db, active_domain(db).size());
}

std::vector<Fact> active_herbrand_base(const Database& db) {
  if (active_herbrand_base_size(db) > 1'000'000)
    throw ResourceLimitError("active Herbrand base exceeds 10^6 facts");
  const ActiveDomain domain = active_domain(db);
  const std::vector<std::string> constants(domain.begin(), domain.end());
  std::vector<Fact> out;
  for (const auto& [name, arity] : predicates(db)) {
    std::vector<std::string> vars;
    vars.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) vars.push_back("x" + std::to_string(i));
    for_each_binding(vars, constants, [&](const std::map<std::string, Term>& bind) {
      Atom atom{name, {}};
      atom.args.reserve(arity);
      for (std::size_t i = 0; i < arity; ++i) atom.args.push_back(bind.at(vars[i]));
      out.push_back(Fact{std::move(atom)});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroundRule> ground_rules(const Database& db, const Universe& universe) {
  std::set<std::string> constant_set = active_domain(db);
  if (universe.has_value())
    constant_set.insert(universe->begin(), universe->end());

  for (const Rule& r : db.rules) {
    if (universe.has_value()) break;  // explicit universe waives the safety gate
    const SafetyReport report = is_safe(r);
    if (!report.safe)
      throw UnsafeRuleError(serialize(r) + " is unsafe: block " +
                                report.block_text + " misses head variables",
                            report.block_text);
  }

  const std::vector<std::string> constants(constant_set.begin(), constant_set.end());
  std::vector<GroundRule> out;
  for (const Rule& r : db.rules) {
    const auto var_set = r.body.free_variables();
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    for_each_binding(vars, constants, [&](const std::map<std::string, Term>& bind) {
      Atom head = r.head;
      for (Term& t : head.args)
        if (t.is_variable()) t = bind.at(t.text);
      Fact head_fact{std::move(head)};
      if (db.extension.contains(head_fact)) return;  // extension wins
      out.push_back(
          GroundRule{r.negative_head, std::move(head_fact), substitute(r.body, bind)});
    });
  }
  return out;
}

std::vector<std::pair<Fact, TruthValue>> gamma_step(const Database& db, const VSet& s,
                                                    const Universe& universe) {
  std::vector<std::pair<Fact, TruthValue>> out;
  for (const auto& entry : s) out.push_back(entry);
  gamma_contributions(ground_rules(db, universe), s, out);
  return out;
}

VSet sigma_step(const Database& db, const VSet& s, const Universe& universe) {
  return sigma_of(ground_rules(db, universe), s);
}

SemanticsResult semantics(const Database& db, const SemanticsOptions& options) {
  const std::vector<GroundRule> rules = ground_rules(db, options.universe);

  std::size_t cap = options.max_iters;
  if (cap == 0) {
    std::set<std::string> grounding = active_domain(db);
    if (options.universe.has_value())
      grounding.insert(options.universe->begin(), options.universe->end());
    const std::size_t base = base_size_over(db, grounding.size());
    cap = base > kSaturated / 2 - 2 ? kSaturated : 2 * base + 2;
  }

  SemanticsResult result;
  VSet current = db.extension;
  if (options.keep_trace) result.trace.push_back(current);
  std::size_t changed_steps = 0;
  while (true) {
    VSet next = sigma_of(rules, current);
    if (next == current) break;
    ++changed_steps;
    if (changed_steps > cap)
      throw ResourceLimitError("fixpoint not reached within " +
                               std::to_string(cap) + " iterations");
    current = std::move(next);
    if (options.keep_trace) result.trace.push_back(current);
  }
  result.fixpoint = std::move(current);
  result.iterations = changed_steps;
  return result;
}

bool is_model(const Database& db, const VSet& m, const Universe& universe) {
  if (!db.extension.subset_of(m)) return false;
  return rules_valid_in(ground_rules(db, universe), m);
}

std::vector<VSet> minimal_models_bruteforce(const Database& db,
                                            std::size_t max_base) {
  const std::size_t base_size = active_herbrand_base_size(db);
  if (base_size > max_base)
    throw ResourceLimitError("active Herbrand base has " +
                             std::to_string(base_size) +
                             " facts, above the brute-force cap of " +
                             std::to_string(max_base));
  const std::vector<Fact> base = active_herbrand_base(db);
  const std::vector<GroundRule> rules = ground_rules(db);

  std::vector<VSet> models;
  std::vector<std::size_t> odometer(base.size(), 0);
  const auto values = all_values();
  while (true) {
    VSet candidate;
    for (std::size_t i = 0; i < base.size(); ++i)
      candidate.assign(base[i], values[odometer[i]]);
    if (db.extension.subset_of(candidate) && rules_valid_in(rules, candidate))
      models.push_back(std::move(candidate));

    std::size_t pos = base.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < values.size()) {
        advanced = true;
        break;
      }
      odometer[pos] = 0;
    }
    if (!advanced) break;
  }

  // Ascending by entry count: any proper submodel of m precedes m, and
  // some minimal model sits below every submodel, so checking against
  // the accepted list suffices.
  std::stable_sort(models.begin(), models.end(),
                   [](const VSet& a, const VSet& b) { return a.size() < b.size(); });
  std::vector<VSet> minimal;
  for (const VSet& m : models) {
    const bool dominated = std::any_of(
        minimal.begin(), minimal.end(),
        [&](const VSet& mu) { return mu.size() < m.size() && mu.subset_of(m); });
    if (!dominated) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

QueryResult query_vset(const VSet& fixpoint, const ActiveDomain& constants,
                       const Formula& f, bool include_unknown) {
  QueryResult result;
  const auto var_set = f.free_variables();
  if (var_set.empty()) {
    result.ground = true;
    result.value = evaluate(fixpoint, f);
    return result;
  }
  result.ground = false;
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::vector<std::string> consts(constants.begin(), constants.end());
  for_each_binding(vars, consts, [&](const std::map<std::string, Term>& bind) {
    const TruthValue v = evaluate(fixpoint, substitute(f, bind));
    if (v == TruthValue::n && !include_unknown) return;
    QueryRow row;
    row.value = v;
    for (const std::string& var : vars) row.binding.emplace_back(var, bind.at(var).text);
    result.rows.push_back(std::move(row));
  });
  return result;
}

QueryResult query(const Database& db, const Formula& f,
                  const SemanticsOptions& options, bool include_unknown) {
  const SemanticsResult sem = semantics(db, options);
  return query_vset(sem.fixpoint, active_domain(db), f, include_unknown);
}

}  // namespace fourval
