#ifndef COMPMACH_EXPRESSION_HPP
#define COMPMACH_EXPRESSION_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace compmach {

/// A parsed single-variable integer expression over the variable 'x'.
///
/// Grammar (standard precedence, left associative):
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := 'x' | integer-literal | '(' expr ')' | '-' factor
///
/// Values are signed 64-bit; every arithmetic step is overflow-checked.
/// Expressions are immutable and cheap to copy (shared AST).
class Expression {
 public:
  /// Parses `text`. Throws SyntaxError (with character position) on
  /// malformed input and UnknownVariableError for identifiers other
  /// than 'x'.
  static Expression parse(std::string_view text);

  /// Evaluates at x = `input`. Throws ArithmeticOverflowError if any
  /// intermediate result leaves the signed 64-bit range.
  std::int64_t eval(std::int64_t input) const;

  /// Canonical text form, minimally parenthesised; parsing it back yields
  /// an expression that evaluates identically everywhere.
  std::string text() const;

  struct Node;  // implementation detail, defined in expression.cpp

 private:
  explicit Expression(std::shared_ptr<const Node> root)
      : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

/// Convenience free-function spelling of Expression::parse.
Expression parse_expression(std::string_view text);

}  // namespace compmach

#endif  // COMPMACH_EXPRESSION_HPP
