#pragma once

#include <memory>
#include <span>
#include <string>

namespace cbosp {

// Parsed arithmetic expression over coordinates x1..xn and y1..yn.
// Grammar: + - * / ^ (right-assoc), unary minus, cos/sin/exp, parentheses,
// decimal literals. Evaluation is pure and reentrant.
class Expression {
 public:
  // Throws Error with the offending position on malformed input.
  static Expression parse(const std::string& text);

  double eval(std::span<const double> x, std::span<const double> y) const;

  // Highest coordinate index referenced (1-based); 0 when the axis is unused.
  int max_x_index() const { return max_x_; }
  int max_y_index() const { return max_y_; }

  const std::string& text() const { return text_; }

 private:
  struct Node;
  Expression() = default;

  std::shared_ptr<const Node> root_;
  std::string text_;
  int max_x_ = 0;
  int max_y_ = 0;
};

}  // namespace cbosp
