#pragma once

#include <string>

#include "fourval/formula.hpp"

namespace fourval {

struct Database;

std::string serialize(TruthValue v);
std::string serialize(const Term& t);
std::string serialize(const Atom& a);
std::string serialize(const Fact& f);

/// Prints with minimal parentheses; reparsing restores the exact tree.
std::string serialize(const Formula& f);

/// One line: `rule [~]Head <- body.`
std::string serialize(const Rule& r);

/// Sorted `Fact = v.` lines, one per entry, each ending in a newline.
std::string serialize(const VSet& s);

/// Extension lines followed by rule lines (rules keep their order).
std::string serialize(const Database& db);

}  // namespace fourval
