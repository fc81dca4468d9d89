#include "reflectode/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <utility>

namespace reflectode {
namespace detail {

enum class Op { Add, Sub, Mul, Div, Pow, Neg };

enum class Fun { Sin, Cos, Tan, Exp, Log, Sinh, Cosh, Abs, Sqrt };

struct ExprNode {
  enum class Kind { Num, Var, Unary, Binary, Call } kind;
  double value = 0.0;  // Num
  Op op = Op::Add;     // Unary (Neg) / Binary
  Fun fun = Fun::Sin;  // Call
  std::shared_ptr<const ExprNode> lhs, rhs;
};

using NodePtr = std::shared_ptr<const ExprNode>;

namespace {

NodePtr make_num(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Num;
  n->value = v;
  return n;
}

NodePtr make_var() {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Var;
  return n;
}

NodePtr make_unary(NodePtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Unary;
  n->op = Op::Neg;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Binary;
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_call(Fun f, NodePtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Call;
  n->fun = f;
  n->lhs = std::move(a);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = sum();
    skip_ws();
    if (pos_ != src_.size())
      throw parse_error("unexpected trailing input '" +
                            std::string(1, src_[pos_]) + "' at offset " +
                            std::to_string(pos_),
                        pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  // sum := product (('+'|'-') product)*
  NodePtr sum() {
    NodePtr e = product();
    for (;;) {
      if (accept('+'))
        e = make_binary(Op::Add, e, product());
      else if (accept('-'))
        e = make_binary(Op::Sub, e, product());
      else
        return e;
    }
  }

  // product := signed (('*'|'/') signed)*
  NodePtr product() {
    NodePtr e = signed_factor();
    for (;;) {
      if (accept('*'))
        e = make_binary(Op::Mul, e, signed_factor());
      else if (accept('/'))
        e = make_binary(Op::Div, e, signed_factor());
      else
        return e;
    }
  }

  // signed := '-' signed | power   (unary minus binds looser than ^)
  NodePtr signed_factor() {
    if (accept('-')) return make_unary(signed_factor());
    return power();
  }

  // power := atom ('^' signed)?   (right-associative; exponent may be signed)
  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) return make_binary(Op::Pow, base, signed_factor());
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size())
      throw parse_error("unexpected end of input at offset " + std::to_string(pos_), pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = sum();
      if (!accept(')'))
        throw parse_error("missing ')' at offset " + std::to_string(pos_), pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw parse_error("unexpected character '" + std::string(1, c) + "' at offset " +
                          std::to_string(pos_),
                      pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(src_.substr(start), &consumed);
    } catch (const std::exception&) {
      throw parse_error("malformed number at offset " + std::to_string(start), start);
    }
    pos_ = start + consumed;
    return make_num(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name = src_.substr(start, pos_ - start);
    if (name == "t") return make_var();
    if (name == "pi") return make_num(M_PI);
    if (name == "e") return make_num(M_E);
    static const std::pair<const char*, Fun> funs[] = {
        {"sin", Fun::Sin},   {"cos", Fun::Cos},   {"tan", Fun::Tan},
        {"exp", Fun::Exp},   {"log", Fun::Log},   {"sinh", Fun::Sinh},
        {"cosh", Fun::Cosh}, {"abs", Fun::Abs},   {"sqrt", Fun::Sqrt},
    };
    for (const auto& [fname, f] : funs) {
      if (name == fname) {
        if (!accept('('))
          throw parse_error("expected '(' after '" + name + "' at offset " +
                                std::to_string(pos_),
                            pos_);
        NodePtr arg = sum();
        if (!accept(')'))
          throw parse_error("missing ')' at offset " + std::to_string(pos_), pos_);
        return make_call(f, std::move(arg));
      }
    }
    throw parse_error("unknown identifier '" + name + "' at offset " +
                          std::to_string(start),
                      start);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

double eval_node(const ExprNode& n, double t) {
  switch (n.kind) {
    case ExprNode::Kind::Num:
      return n.value;
    case ExprNode::Kind::Var:
      return t;
    case ExprNode::Kind::Unary:
      return -eval_node(*n.lhs, t);
    case ExprNode::Kind::Binary: {
      const double a = eval_node(*n.lhs, t);
      const double b = eval_node(*n.rhs, t);
      double r = 0.0;
      switch (n.op) {
        case Op::Add: r = a + b; break;
        case Op::Sub: r = a - b; break;
        case Op::Mul: r = a * b; break;
        case Op::Div:
          if (b == 0.0) throw eval_error("division by zero");
          r = a / b;
          break;
        case Op::Pow:
          r = std::pow(a, b);
          break;
        case Op::Neg: break;  // unreachable
      }
      if (!std::isfinite(r)) throw eval_error("non-finite value in arithmetic");
      return r;
    }
    case ExprNode::Kind::Call: {
      const double a = eval_node(*n.lhs, t);
      double r = 0.0;
      switch (n.fun) {
        case Fun::Sin: r = std::sin(a); break;
        case Fun::Cos: r = std::cos(a); break;
        case Fun::Tan: r = std::tan(a); break;
        case Fun::Exp: r = std::exp(a); break;
        case Fun::Log:
          if (a <= 0.0) throw eval_error("log of non-positive value");
          r = std::log(a);
          break;
        case Fun::Sinh: r = std::sinh(a); break;
        case Fun::Cosh: r = std::cosh(a); break;
        case Fun::Abs: r = std::fabs(a); break;
        case Fun::Sqrt:
          if (a < 0.0) throw eval_error("sqrt of negative value");
          r = std::sqrt(a);
          break;
      }
      if (!std::isfinite(r)) throw eval_error("non-finite function value");
      return r;
    }
  }
  throw eval_error("corrupt expression tree");
}

const char* fun_name(Fun f) {
  switch (f) {
    case Fun::Sin: return "sin";
    case Fun::Cos: return "cos";
    case Fun::Tan: return "tan";
    case Fun::Exp: return "exp";
    case Fun::Log: return "log";
    case Fun::Sinh: return "sinh";
    case Fun::Cosh: return "cosh";
    case Fun::Abs: return "abs";
    case Fun::Sqrt: return "sqrt";
  }
  return "?";
}

void print_node(const ExprNode& n, std::ostream& os) {
  switch (n.kind) {
    case ExprNode::Kind::Num: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      os << buf;
      return;
    }
    case ExprNode::Kind::Var:
      os << 't';
      return;
    case ExprNode::Kind::Unary:
      os << "(-";
      print_node(*n.lhs, os);
      os << ')';
      return;
    case ExprNode::Kind::Binary: {
      const char* sym = "?";
      switch (n.op) {
        case Op::Add: sym = "+"; break;
        case Op::Sub: sym = "-"; break;
        case Op::Mul: sym = "*"; break;
        case Op::Div: sym = "/"; break;
        case Op::Pow: sym = "^"; break;
        case Op::Neg: break;
      }
      os << '(';
      print_node(*n.lhs, os);
      os << sym;
      print_node(*n.rhs, os);
      os << ')';
      return;
    }
    case ExprNode::Kind::Call:
      os << fun_name(n.fun) << '(';
      print_node(*n.lhs, os);
      os << ')';
      return;
  }
}

}  // namespace
}  // namespace detail

Expr Expr::parse(const std::string& src) {
  detail::Parser p(src);
  return Expr(p.parse());
}

double Expr::eval(double t) const {
  if (!root_) throw eval_error("empty expression");
  return detail::eval_node(*root_, t);
}

std::string Expr::to_string() const {
  if (!root_) return "";
  std::ostringstream os;
  detail::print_node(*root_, os);
  return os.str();
}

}  // namespace reflectode
