#pragma once

#include <memory>
#include <string>

#include "reflectode/errors.hpp"

namespace reflectode {

namespace detail {
struct ExprNode;
}

// Immutable scalar function of one variable t, built by parse().
//
// Grammar: + - * / ^ with standard precedence (^ > unary minus > * / > + -),
// left-associative binaries except ^ which is right-associative; functions
// sin cos tan exp log sinh cosh abs sqrt; constants pi and e (folded at parse
// time); whitespace ignored.
class Expr {
 public:
  Expr() = default;

  // Throws parse_error (with byte offset) on malformed input.
  static Expr parse(const std::string& src);

  // IEEE double evaluation. Throws eval_error when the value leaves the
  // function's domain (log of non-positive, division by zero, overflow, ...).
  double eval(double t) const;

  // Fully parenthesized form; reparses to an expression evaluating identically.
  std::string to_string() const;

  bool valid() const noexcept { return root_ != nullptr; }

 private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> root)
      : root_(std::move(root)) {}
  std::shared_ptr<const detail::ExprNode> root_;
};

}  // namespace reflectode
