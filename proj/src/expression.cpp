#include "compmach/expression.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "compmach/errors.hpp"

namespace compmach {

enum class NodeKind { variable, literal, negate, add, subtract, multiply };

struct Expression::Node {
  NodeKind kind;
  std::int64_t literal = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make_node(NodeKind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr,
                  std::int64_t literal = 0) {
  auto node = std::make_shared<Expression::Node>();
  node->kind = kind;
  node->literal = literal;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    auto root = parse_expr();
    skip_spaces();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return root;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        lhs = make_node(NodeKind::add, std::move(lhs), parse_term());
      } else if (eat('-')) {
        lhs = make_node(NodeKind::subtract, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    auto lhs = parse_factor();
    while (eat('*')) {
      lhs = make_node(NodeKind::multiply, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  NodePtr parse_factor() {
    skip_spaces();
    if (pos_ >= text_.size()) {
      throw SyntaxError("expected a factor, found end of input", pos_);
    }
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return make_node(NodeKind::negate, parse_factor());
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      if (!eat(')')) {
        throw SyntaxError("expected ')'", pos_);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return parse_literal();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier();
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_literal() {
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (__builtin_mul_overflow(value, std::int64_t{10}, &value) ||
          __builtin_add_overflow(value, std::int64_t{digit}, &value)) {
        throw SyntaxError("integer literal exceeds signed 64 bits", start);
      }
      ++pos_;
    }
    return make_node(NodeKind::literal, nullptr, nullptr, value);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    auto name = text_.substr(start, pos_ - start);
    if (name != "x") {
      throw UnknownVariableError(std::string(name), start);
    }
    return make_node(NodeKind::variable);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t eval_node(const Expression::Node& node, std::int64_t x) {
  std::int64_t result = 0;
  switch (node.kind) {
    case NodeKind::variable:
      return x;
    case NodeKind::literal:
      return node.literal;
    case NodeKind::negate: {
      const std::int64_t inner = eval_node(*node.lhs, x);
      if (__builtin_sub_overflow(std::int64_t{0}, inner, &result)) {
        throw ArithmeticOverflowError("negation overflows");
      }
      return result;
    }
    case NodeKind::add:
      if (__builtin_add_overflow(eval_node(*node.lhs, x),
                                 eval_node(*node.rhs, x), &result)) {
        throw ArithmeticOverflowError("addition overflows");
      }
      return result;
    case NodeKind::subtract:
      if (__builtin_sub_overflow(eval_node(*node.lhs, x),
                                 eval_node(*node.rhs, x), &result)) {
        throw ArithmeticOverflowError("subtraction overflows");
      }
      return result;
    case NodeKind::multiply:
      if (__builtin_mul_overflow(eval_node(*node.lhs, x),
                                 eval_node(*node.rhs, x), &result)) {
        throw ArithmeticOverflowError("multiplication overflows");
      }
      return result;
  }
  throw Error("corrupt expression node");
}

// Precedence for printing: additive 1, multiplicative 2, unary 3, atoms 4.
int precedence(NodeKind kind) {
  switch (kind) {
    case NodeKind::add:
    case NodeKind::subtract:
      return 1;
    case NodeKind::multiply:
      return 2;
    case NodeKind::negate:
      return 3;
    case NodeKind::variable:
    case NodeKind::literal:
      return 4;
  }
  return 4;
}

void print_node(const Expression::Node& node, std::string& out);

void print_child(const Expression::Node& child, int parent_precedence,
                 bool needs_strictly_higher, std::string& out) {
  const int child_precedence = precedence(child.kind);
  const bool parens = needs_strictly_higher
                          ? child_precedence <= parent_precedence
                          : child_precedence < parent_precedence;
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_node(const Expression::Node& node, std::string& out) {
  switch (node.kind) {
    case NodeKind::variable:
      out += 'x';
      return;
    case NodeKind::literal:
      out += std::to_string(node.literal);
      return;
    case NodeKind::negate:
      out += '-';
      print_child(*node.lhs, precedence(NodeKind::negate), false, out);
      return;
    case NodeKind::add:
      print_child(*node.lhs, 1, false, out);
      out += " + ";
      print_child(*node.rhs, 1, true, out);
      return;
    case NodeKind::subtract:
      print_child(*node.lhs, 1, false, out);
      out += " - ";
      print_child(*node.rhs, 1, true, out);
      return;
    case NodeKind::multiply:
      print_child(*node.lhs, 2, false, out);
      out += " * ";
      print_child(*node.rhs, 2, true, out);
      return;
  }
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  return Expression(Parser(text).run());
}

std::int64_t Expression::eval(std::int64_t input) const {
  return eval_node(*root_, input);
}

std::string Expression::text() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

Expression parse_expression(std::string_view text) {
  return Expression::parse(text);
}

}  // namespace compmach
