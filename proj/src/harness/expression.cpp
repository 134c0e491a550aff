#include "asymptotica/harness/expression.hpp"

#include <cctype>

#include "asymptotica/errors.hpp"
#include "asymptotica/nonarch/laurent_text.hpp"

namespace asymptotica::harness {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (accept('+')) e = make(Binary{'+', e, term()});
      else if (accept('-')) e = make(Binary{'-', e, term()});
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (accept('*')) e = make(Binary{'*', e, factor()});
      else if (accept('/')) e = make(Binary{'/', e, factor()});
      else return e;
    }
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (!accept('^')) return b;
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("exponent must be an integer");
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) fail("exponent must be an integer");
    try {
      return make(Power{b, std::stoi(s_.substr(start, pos_ - start))});
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("exponent out of range");
    }
  }

  ExprPtr base() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "r") return make(Rho{});
      if (name != "sqrt" && name != "st" && name != "inv") {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
      if (!accept('(')) fail("expected '(' after " + name);
      ExprPtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return make(Call{name, arg});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ - d;
    };
    std::size_t count = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) fail("malformed number");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    return make(Literal{s_.substr(start, pos_ - start)});
  }
};

int precedence(const ExprPtr& e) {
  if (const auto* b = std::get_if<Binary>(&e->node)) return (b->op == '+' || b->op == '-') ? 1 : 2;
  if (std::holds_alternative<Power>(e->node)) return 3;
  return 4;
}

std::string wrap(const ExprPtr& e, bool paren) {
  const std::string s = renderExpression(e);
  return paren ? "(" + s + ")" : s;
}

nonarch::LaurentNumber literalValue(const std::string& text, const nonarch::FieldContext& ctx) {
  if (ctx.domain == nonarch::CoeffDomain::Exact) return nonarch::LaurentNumber::constant(nonarch::detail::parseDecimalExact(text), ctx);
  return nonarch::LaurentNumber::constant(std::strtod(text.c_str(), nullptr), ctx);
}

}  // namespace

ExprPtr parseFieldExpression(const std::string& text) { return Parser(text).parse(); }

std::string renderExpression(const ExprPtr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Literal>) {
          return n.text;
        } else if constexpr (std::is_same_v<N, Rho>) {
          return "r";
        } else if constexpr (std::is_same_v<N, Binary>) {
          const int p = precedence(e);
          return wrap(n.lhs, precedence(n.lhs) < p) + ' ' + n.op + ' ' + wrap(n.rhs, precedence(n.rhs) <= p);
        } else if constexpr (std::is_same_v<N, Power>) {
          return wrap(n.base, precedence(n.base) <= 3) + '^' + std::to_string(n.exponent);
        } else {
          return n.function + "(" + renderExpression(n.argument) + ")";
        }
      },
      e->node);
}

bool sameTree(const ExprPtr& a, const ExprPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using N = std::decay_t<decltype(x)>;
        const auto& y = std::get<N>(b->node);
        if constexpr (std::is_same_v<N, Literal>) return x.text == y.text;
        else if constexpr (std::is_same_v<N, Rho>) return true;
        else if constexpr (std::is_same_v<N, Binary>) return x.op == y.op && sameTree(x.lhs, y.lhs) && sameTree(x.rhs, y.rhs);
        else if constexpr (std::is_same_v<N, Power>) return x.exponent == y.exponent && sameTree(x.base, y.base);
        else return x.function == y.function && sameTree(x.argument, y.argument);
      },
      a->node);
}

nonarch::LaurentNumber evaluate(const ExprPtr& e, const nonarch::FieldContext& ctx) {
  return std::visit(
      [&](const auto& n) -> nonarch::LaurentNumber {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Literal>) {
          return literalValue(n.text, ctx);
        } else if constexpr (std::is_same_v<N, Rho>) {
          return nonarch::LaurentNumber::rho(ctx);
        } else if constexpr (std::is_same_v<N, Binary>) {
          const auto a = evaluate(n.lhs, ctx), b = evaluate(n.rhs, ctx);
          switch (n.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            default: return a / b;
          }
        } else if constexpr (std::is_same_v<N, Power>) {
          return pow(evaluate(n.base, ctx), n.exponent);
        } else {
          const auto a = evaluate(n.argument, ctx);
          if (n.function == "sqrt") return sqrtPositive(a);
          if (n.function == "inv") return invert(a);
          return standardPartNumber(a);
        }
      },
      e->node);
}

FieldReport evaluateLine(const std::string& text, const nonarch::FieldContext& ctx) {
  const auto value = evaluate(parseFieldExpression(text), ctx);
  FieldReport r;
  r.value = render(value);
  if (value.isZero()) {
    r.scaleClass = "zero";
  } else {
    const auto c = nonarch::classify(value);
    r.scaleClass = std::string(label(c.magnitude)) + ", " + label(c.rho);
  }
  r.standardPart = renderStandardPart(value);
  return r;
}

}  // namespace asymptotica::harness
