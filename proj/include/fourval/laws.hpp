#pragma once

#include <string>
#include <vector>

#include "fourval/truth.hpp"

namespace fourval {

/// Outcome of one algebraic law checked by exhaustive enumeration.
/// A failing law reports every refuting cell in `detail`.
struct LawResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

/// Runs every documented kernel law (each at most 64 enumerated cases).
/// The suite states the laws as documented; a law that is refuted by
/// the tables is reported as failed rather than silently amended.
std::vector<LawResult> run_law_suite();

}  // namespace fourval
