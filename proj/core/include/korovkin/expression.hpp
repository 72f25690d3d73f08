#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "korovkin/grid.hpp"

namespace korovkin {

// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Arithmetic expression in one variable.
//
// Grammar (^ right-associative and binding tighter than unary minus):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := NUMBER | 'pi' | 'x' | FUNC '(' expr ')' | '(' expr ')'
//   FUNC    := sin | cos | exp | abs | sqrt
class Expression {
 public:
  static Expression parse(std::string_view text);

  double operator()(double x) const;

  // Reparseable text; parse(str()) reproduces the tree.
  std::string str() const;

  bool operator==(const Expression& other) const;

  // Evaluates at every sample of the grid convention for (domain, n) and
  // throws std::domain_error on the first non-finite value.
  void validate_on(const Interval& domain, std::size_t n) const;

  RealFunction function() const;

  // Tree construction, used by generators and tests.
  static Expression number(double v);
  static Expression variable();
  static Expression pi();
  enum class Fn { sin, cos, exp, abs, sqrt };
  static Expression call(Fn f, Expression arg);
  static Expression binary(char op, Expression lhs, Expression rhs);  // + - * / ^
  static Expression negate(Expression arg);

 private:
  enum class Kind : unsigned char { number, var_x, const_pi, add, sub, mul, div, pow, neg, call };
  struct Node {
    Kind kind;
    Fn fn;        // for Kind::call
    double value; // for Kind::number
    int a;        // child indices into the arena, -1 when unused
    int b;
  };

  Expression() = default;
  int copy_into(std::vector<Node>& arena, int idx) const;
  double eval(int idx, double x) const;
  void print(int idx, std::string& out) const;
  bool equal(int i, const Expression& other, int j) const;

  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace korovkin
