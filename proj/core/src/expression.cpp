#include "korovkin/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace korovkin {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shortest decimal form that parses back to exactly the same double.
std::string format_number(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

Expression Expression::number(double v) {
  Expression e;
  e.nodes_.push_back(Node{Kind::number, Fn::sin, v, -1, -1});
  e.root_ = 0;
  return e;
}

Expression Expression::variable() {
  Expression e;
  e.nodes_.push_back(Node{Kind::var_x, Fn::sin, 0.0, -1, -1});
  e.root_ = 0;
  return e;
}

Expression Expression::pi() {
  Expression e;
  e.nodes_.push_back(Node{Kind::const_pi, Fn::sin, 0.0, -1, -1});
  e.root_ = 0;
  return e;
}

int Expression::copy_into(std::vector<Node>& arena, int idx) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  Node out = n;
  if (n.a >= 0) out.a = copy_into(arena, n.a);
  if (n.b >= 0) out.b = copy_into(arena, n.b);
  arena.push_back(out);
  return static_cast<int>(arena.size()) - 1;
}

Expression Expression::call(Fn f, Expression arg) {
  Expression e;
  const int a = arg.copy_into(e.nodes_, arg.root_);
  e.nodes_.push_back(Node{Kind::call, f, 0.0, a, -1});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  return e;
}

Expression Expression::binary(char op, Expression lhs, Expression rhs) {
  Kind k;
  switch (op) {
    case '+': k = Kind::add; break;
    case '-': k = Kind::sub; break;
    case '*': k = Kind::mul; break;
    case '/': k = Kind::div; break;
    case '^': k = Kind::pow; break;
    default: throw std::invalid_argument("Expression: unknown operator");
  }
  Expression e;
  const int a = lhs.copy_into(e.nodes_, lhs.root_);
  const int b = rhs.copy_into(e.nodes_, rhs.root_);
  e.nodes_.push_back(Node{k, Fn::sin, 0.0, a, b});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  return e;
}

Expression Expression::negate(Expression arg) {
  Expression e;
  const int a = arg.copy_into(e.nodes_, arg.root_);
  e.nodes_.push_back(Node{Kind::neg, Fn::sin, 0.0, a, -1});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  return e;
}

namespace {

struct Builder {
  // mirrors Expression::Node layout through the public construction helpers
  Expression parse(std::string_view text) {
    text_ = text;
    pos_ = 0;
    Expression e = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      if (consume('+'))
        lhs = Expression::binary('+', std::move(lhs), term());
      else if (consume('-'))
        lhs = Expression::binary('-', std::move(lhs), term());
      else
        return lhs;
    }
  }

  Expression term() {
    Expression lhs = unary();
    for (;;) {
      if (consume('*'))
        lhs = Expression::binary('*', std::move(lhs), unary());
      else if (consume('/'))
        lhs = Expression::binary('/', std::move(lhs), unary());
      else
        return lhs;
    }
  }

  Expression unary() {
    if (consume('-')) return Expression::negate(unary());
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (consume('^')) return Expression::binary('^', std::move(base), unary());
    return base;
  }

  Expression primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      skip();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Expression number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = start;
        throw ParseError("malformed number", start);
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      (void)mark;
    }
    const std::string token(text_.substr(start, pos_ - start));
    return Expression::number(std::strtod(token.c_str(), nullptr));
  }

  Expression identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expression::variable();
    if (name == "pi") return Expression::pi();
    Expression::Fn fn;
    if (name == "sin")
      fn = Expression::Fn::sin;
    else if (name == "cos")
      fn = Expression::Fn::cos;
    else if (name == "exp")
      fn = Expression::Fn::exp;
    else if (name == "abs")
      fn = Expression::Fn::abs;
    else if (name == "sqrt")
      fn = Expression::Fn::sqrt;
    else {
      pos_ = start;
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    skip();
    if (!consume('(')) fail("expected '(' after function name");
    Expression arg = expr();
    skip();
    if (!consume(')')) fail("expected ')'");
    return Expression::call(fn, std::move(arg));
  }
};

}  // namespace

Expression Expression::parse(std::string_view text) { return Builder{}.parse(text); }

double Expression::eval(int idx, double x) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  switch (n.kind) {
    case Kind::number: return n.value;
    case Kind::var_x: return x;
    case Kind::const_pi: return kPi;
    case Kind::add: return eval(n.a, x) + eval(n.b, x);
    case Kind::sub: return eval(n.a, x) - eval(n.b, x);
    case Kind::mul: return eval(n.a, x) * eval(n.b, x);
    case Kind::div: return eval(n.a, x) / eval(n.b, x);
    case Kind::pow: return std::pow(eval(n.a, x), eval(n.b, x));
    case Kind::neg: return -eval(n.a, x);
    case Kind::call: {
      const double v = eval(n.a, x);
      switch (n.fn) {
        case Fn::sin: return std::sin(v);
        case Fn::cos: return std::cos(v);
        case Fn::exp: return std::exp(v);
        case Fn::abs: return std::abs(v);
        case Fn::sqrt: return std::sqrt(v);
      }
    }
  }
  return 0.0;  // unreachable
}

double Expression::operator()(double x) const { return eval(root_, x); }

RealFunction Expression::function() const {
  return [e = *this](double x) { return e(x); };
}

// precedence levels: 1 add/sub, 2 mul/div, 3 unary minus, 4 pow, 5 atom
void Expression::print(int idx, std::string& out) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  const auto level = [this](int i) {
    switch (nodes_[static_cast<std::size_t>(i)].kind) {
      case Kind::add:
      case Kind::sub: return 1;
      case Kind::mul:
      case Kind::div: return 2;
      case Kind::neg: return 3;
      case Kind::pow: return 4;
      default: return 5;
    }
  };
  const auto paren = [this, &out](int child) {
    out.push_back('(');
    print(child, out);
    out.push_back(')');
  };
  switch (n.kind) {
    case Kind::number: out += format_number(n.value); return;
    case Kind::var_x: out.push_back('x'); return;
    case Kind::const_pi: out += "pi"; return;
    case Kind::add:
    case Kind::sub: {
      if (level(n.a) < 1) paren(n.a); else print(n.a, out);
      out.push_back(n.kind == Kind::add ? '+' : '-');
      // right side of +/- must be a term
      if (level(n.b) < 2) paren(n.b); else print(n.b, out);
      return;
    }
    case Kind::mul:
    case Kind::div: {
      if (level(n.a) < 2) paren(n.a); else print(n.a, out);
      out.push_back(n.kind == Kind::mul ? '*' : '/');
      // right side of * and / must be a unary
      if (level(n.b) < 3) paren(n.b); else print(n.b, out);
      return;
    }
    case Kind::neg: {
      out.push_back('-');
      if (level(n.a) < 3) paren(n.a); else print(n.a, out);
      return;
    }
    case Kind::pow: {
      // base must be an atom, exponent a unary
      if (level(n.a) < 5) paren(n.a); else print(n.a, out);
      out.push_back('^');
      if (level(n.b) < 3) paren(n.b); else print(n.b, out);
      return;
    }
    case Kind::call: {
      switch (n.fn) {
        case Fn::sin: out += "sin"; break;
        case Fn::cos: out += "cos"; break;
        case Fn::exp: out += "exp"; break;
        case Fn::abs: out += "abs"; break;
        case Fn::sqrt: out += "sqrt"; break;
      }
      out.push_back('(');
      print(n.a, out);
      out.push_back(')');
      return;
    }
  }
}

std::string Expression::str() const {
  std::string out;
  print(root_, out);
  return out;
}

bool Expression::equal(int i, const Expression& other, int j) const {
  const Node& a = nodes_[static_cast<std::size_t>(i)];
  const Node& b = other.nodes_[static_cast<std::size_t>(j)];
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::number: return a.value == b.value;
    case Kind::var_x:
    case Kind::const_pi: return true;
    case Kind::call:
      if (a.fn != b.fn) return false;
      return equal(a.a, other, b.a);
    case Kind::neg: return equal(a.a, other, b.a);
    default: return equal(a.a, other, b.a) && equal(a.b, other, b.b);
  }
}

bool Expression::operator==(const Expression& other) const {
  return equal(root_, other, other.root_);
}

void Expression::validate_on(const Interval& domain, std::size_t n) const {
  const double len = domain.length();
  const double denom = domain.periodic ? static_cast<double>(n) : static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = domain.lo + static_cast<double>(k) * len / denom;
    const double v = (*this)(x);
    if (!std::isfinite(v)) {
      throw std::domain_error("expression '" + str() + "' is not finite at x = " +
                              format_number(x));
    }
  }
}

}  // namespace korovkin
