#include "cbosp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "cbosp/error.hpp"

namespace cbosp {

enum class NodeKind { kConst, kVar, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCos, kSin, kExp };

struct Expression::Node {
  NodeKind kind;
  double value = 0.0;              // kConst
  bool x_axis = false;             // kVar
  int index = 0;                   // kVar, 0-based
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

}  // namespace

// Recursive-descent parser; each level owns one precedence tier.
class Parser {
 public:
  Parser(const std::string& text, int& max_x, int& max_y)
      : text_(text), max_x_(max_x), max_y_(max_y) {}

  NodePtr run() {
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  using Node = Expression::Node;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("expression parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static NodePtr make(NodeKind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr parse_sum() {
    NodePtr left = parse_product();
    for (;;) {
      if (eat('+'))
        left = make(NodeKind::kAdd, left, parse_product());
      else if (eat('-'))
        left = make(NodeKind::kSub, left, parse_product());
      else
        return left;
    }
  }

  NodePtr parse_product() {
    NodePtr left = parse_unary();
    for (;;) {
      if (eat('*'))
        left = make(NodeKind::kMul, left, parse_unary());
      else if (eat('/'))
        left = make(NodeKind::kDiv, left, parse_unary());
      else
        return left;
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return make(NodeKind::kNeg, parse_unary());
    return parse_power();
  }

  // '^' binds tighter than unary minus and associates right: -x1^2 is -(x1^2).
  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (eat('^')) return make(NodeKind::kPow, base, parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::kConst;
    n->value = v;
    return n;
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word = text_.substr(start, pos_ - start);

    if (word == "cos" || word == "sin" || word == "exp") {
      if (!eat('(')) fail("expected '(' after " + word);
      NodePtr arg = parse_sum();
      if (!eat(')')) fail("expected ')'");
      const NodeKind k = word == "cos"   ? NodeKind::kCos
                         : word == "sin" ? NodeKind::kSin
                                         : NodeKind::kExp;
      return make(k, arg);
    }
    if (word == "x" || word == "y") {
      std::size_t digits = pos_;
      while (digits < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digits]))) ++digits;
      if (digits == pos_) fail("coordinate needs an index, e.g. " + word + "1");
      const int idx = std::atoi(text_.substr(pos_, digits - pos_).c_str());
      pos_ = digits;
      if (idx < 1) fail("coordinate index must be >= 1");
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::kVar;
      n->x_axis = (word == "x");
      n->index = idx - 1;
      if (n->x_axis)
        max_x_ = std::max(max_x_, idx);
      else
        max_y_ = std::max(max_y_, idx);
      return n;
    }
    fail("unknown identifier '" + word + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int& max_x_;
  int& max_y_;
};

namespace {

double eval_node(const Expression::Node& n, std::span<const double> x, std::span<const double> y) {
  switch (n.kind) {
    case NodeKind::kConst:
      return n.value;
    case NodeKind::kVar: {
      const auto& v = n.x_axis ? x : y;
      return v[static_cast<std::size_t>(n.index)];
    }
    case NodeKind::kNeg:
      return -eval_node(*n.a, x, y);
    case NodeKind::kAdd:
      return eval_node(*n.a, x, y) + eval_node(*n.b, x, y);
    case NodeKind::kSub:
      return eval_node(*n.a, x, y) - eval_node(*n.b, x, y);
    case NodeKind::kMul:
      return eval_node(*n.a, x, y) * eval_node(*n.b, x, y);
    case NodeKind::kDiv:
      return eval_node(*n.a, x, y) / eval_node(*n.b, x, y);
    case NodeKind::kPow:
      return std::pow(eval_node(*n.a, x, y), eval_node(*n.b, x, y));
    case NodeKind::kCos:
      return std::cos(eval_node(*n.a, x, y));
    case NodeKind::kSin:
      return std::sin(eval_node(*n.a, x, y));
    case NodeKind::kExp:
      return std::exp(eval_node(*n.a, x, y));
  }
  return 0.0;  // unreachable
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text, e.max_x_, e.max_y_).run();
  return e;
}

double Expression::eval(std::span<const double> x, std::span<const double> y) const {
  return eval_node(*root_, x, y);
}

}  // namespace cbosp
