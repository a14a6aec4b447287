#pragma once

#include <string>

#include "fourval/engine.hpp"
#include "fourval/updates.hpp"

/// Textual syntax.
///
///   fact declaration   Pred(c1,...,ck) = v.        v in {t, b, f}
///   rule declaration   rule [~]Head(...) <- body.
///   comments           % to end of line
///
/// Formulas: atoms Pred or Pred(term,...); terms are lowercase
/// constants, integers, or ?variables.  Connectors, tightest first:
/// prefix ~, conf, compl and the calls T(.) B(.) N(.) F(.) inc(.);
/// then (x) and (o); &; (+); |; and the right-associative implications
/// -> => ~> *-> *~>.
namespace fourval {

Database parse_database(const std::string& text);

/// Standalone formula over the full connector set.
Formula parse_formula(const std::string& text);

/// `Fact = v` with all four values allowed (n encodes deletion).
VPair parse_vpair(const std::string& text);

}  // namespace fourval
