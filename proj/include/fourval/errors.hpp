#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fourval {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluating a formula that still contains a variable.
struct EvalError : Error {
  using Error::Error;
};

/// Ill-formed rule: head variable missing from the body, or a body
/// connector outside {~, |, &, (+), (x)}.
struct RuleError : Error {
  using Error::Error;
};

/// Textual input rejected by the lexer or parser; positions are 1-based.
struct ParseError : Error {
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Two declarations assign different values to the same fact.
struct InconsistentExtensionError : Error {
  using Error::Error;
};

/// Grounding refused because a rule is unsafe and no explicit universe
/// was supplied.
struct UnsafeRuleError : Error {
  UnsafeRuleError(std::string message, std::string block)
      : Error(std::move(message)), violating_block(std::move(block)) {}
  std::string violating_block;
};

/// A configured bound was exceeded: normal-form node budget, fixpoint
/// iteration cap, synthesis arity bound, or brute-force base size.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace fourval
