#include "weylsum/expr.hpp"

#include <cctype>

#include "weylsum/errors.hpp"

namespace weylsum {

namespace {

using Node = ClassExpr::Node;
using NodePtr = ClassExpr::NodePtr;
using Kind = ClassExpr::Kind;

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    int column = static_cast<int>(pos_) + 1;
    throw SyntaxError("syntax error at column " + std::to_string(column) + ": " + message, column);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool at_digit() {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  long parse_nat(const char* what) {
    skip_ws();
    if (!at_digit()) fail(std::string("expected ") + what);
    long v = 0;
    while (at_digit()) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000L) fail("number too large");
      ++pos_;
    }
    return v;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      NodePtr rhs = parse_term();
      auto node = std::make_unique<Node>();
      node->kind = c == '+' ? Kind::Add : Kind::Sub;
      node->a = std::move(lhs);
      node->b = std::move(rhs);
      lhs = std::move(node);
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (peek() == '*') {
      ++pos_;
      NodePtr rhs = parse_factor();
      auto node = std::make_unique<Node>();
      node->kind = Kind::Mul;
      node->a = std::move(lhs);
      node->b = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("exponent must be a natural number");
    long e = parse_nat("exponent");
    if (pos_ < text_.size() && text_[pos_] == '/') fail("fractional exponent");
    auto node = std::make_unique<Node>();
    node->kind = Kind::Pow;
    node->exponent = static_cast<unsigned>(e);
    node->a = std::move(base);
    return node;
  }

  NodePtr parse_base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_expr();
      expect(')', "')'");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_rational_literal();
    if (c == 'c') return parse_chern();
    if (c == 'e' || c == 'p') return parse_sym(c);
    if (c == 'y') return parse_var();
    fail("expected a rational, class symbol, or '('");
  }

  NodePtr parse_rational_literal() {
    skip_ws();
    bool neg = false;
    if (text_[pos_] == '-') {
      neg = true;
      ++pos_;
      if (!at_digit()) fail("expected digits after '-'");
    }
    long num = parse_nat("numerator");
    long den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = parse_nat("denominator");
      if (den == 0) fail("zero denominator");
    }
    auto node = std::make_unique<Node>();
    node->kind = Kind::Literal;
    node->lit = rational(neg ? -num : num, den);
    return node;
  }

  NodePtr parse_chern() {
    ++pos_;  // 'c'
    auto node = std::make_unique<Node>();
    node->kind = Kind::Chern;
    node->index = static_cast<int>(parse_nat("class index"));
    expect('(', "'('");
    char b = peek();
    if (b != 'S' && b != 'Q') fail("expected bundle S or Q");
    ++pos_;
    node->bundle = b == 'S' ? TautBundle::Sub : TautBundle::Quot;
    expect(')', "')'");
    return node;
  }

  NodePtr parse_sym(char which) {
    ++pos_;  // 'e' or 'p'
    auto node = std::make_unique<Node>();
    node->kind = which == 'e' ? Kind::ElemSym : Kind::PowerSum;
    node->index = static_cast<int>(parse_nat("class index"));
    expect('(', "'('");
    expect('y', "variable range y[lo..hi]");
    expect('[', "'['");
    node->lo = static_cast<int>(parse_nat("range start"));
    expect('.', "'..'");
    expect('.', "'..'");
    node->hi = static_cast<int>(parse_nat("range end"));
    expect(']', "']'");
    expect(')', "')'");
    return node;
  }

  NodePtr parse_var() {
    ++pos_;  // 'y'
    if (!at_digit()) fail("expected variable index after 'y'");
    auto node = std::make_unique<Node>();
    node->kind = Kind::Var;
    node->index = static_cast<int>(parse_nat("variable index"));
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

/* Precedence: 1 sum, 2 product, 3 power, 4 atom.  A child below the
   required level gets parentheses. */
void render_node(const Node& n, int required, std::string& out) {
  auto wrap = [&](int mine, auto&& body) {
    if (mine < required) out += "(";
    body();
    if (mine < required) out += ")";
  };
  switch (n.kind) {
    case Kind::Literal:
      out += to_string(n.lit);
      break;
    case Kind::Chern:
      out += "c" + std::to_string(n.index) + "(" + (n.bundle == TautBundle::Sub ? "S" : "Q") + ")";
      break;
    case Kind::ElemSym:
    case Kind::PowerSum:
      out += (n.kind == Kind::ElemSym ? "e" : "p") + std::to_string(n.index) + "(y[" +
             std::to_string(n.lo) + ".." + std::to_string(n.hi) + "])";
      break;
    case Kind::Var:
      out += "y" + std::to_string(n.index);
      break;
    case Kind::Add:
      wrap(1, [&] {
        render_node(*n.a, 1, out);
        out += " + ";
        render_node(*n.b, 2, out);
      });
      break;
    case Kind::Sub:
      wrap(1, [&] {
        render_node(*n.a, 1, out);
        out += " - ";
        render_node(*n.b, 2, out);
      });
      break;
    case Kind::Mul:
      wrap(2, [&] {
        render_node(*n.a, 2, out);
        out += "*";
        render_node(*n.b, 3, out);
      });
      break;
    case Kind::Pow:
      wrap(3, [&] {
        render_node(*n.a, 4, out);
        out += "^" + std::to_string(n.exponent);
      });
      break;
  }
}

Polynomial compile_node(const Node& n, const CompileContext& ctx) {
  const int rank = ctx.rank;
  switch (n.kind) {
    case Kind::Literal:
      return Polynomial::constant(VarFamily::Y, rank, n.lit);
    case Kind::Var:
      if (n.index < 1 || n.index > rank)
        throw ValidationError("variable y" + std::to_string(n.index) + " exceeds rank " +
                              std::to_string(rank));
      return Polynomial::variable(VarFamily::Y, rank, n.index - 1);
    case Kind::ElemSym:
    case Kind::PowerSum: {
      if (n.lo < 1 || n.hi > rank || n.lo > n.hi)
        throw ValidationError("range y[" + std::to_string(n.lo) + ".." + std::to_string(n.hi) +
                              "] invalid for rank " + std::to_string(rank));
      std::vector<int> vars;
      for (int i = n.lo; i <= n.hi; ++i) vars.push_back(i - 1);
      return n.kind == Kind::ElemSym ? elem_sym(VarFamily::Y, rank, vars, n.index)
                                     : power_sum(VarFamily::Y, rank, vars, n.index);
    }
    case Kind::Chern: {
      if (!ctx.blocks)
        throw ValidationError("c-classes need a Grassmannian block structure on this space");
      auto [k, nn] = *ctx.blocks;
      const int bundle_rank = n.bundle == TautBundle::Sub ? k : nn - k;
      if (n.index < 0 || n.index > bundle_rank)
        throw ValidationError("Chern index " + std::to_string(n.index) + " outside 0.." +
                              std::to_string(bundle_rank));
      std::vector<int> vars;
      if (n.bundle == TautBundle::Sub)
        for (int i = 0; i < k; ++i) vars.push_back(i);
      else
        for (int i = k; i < nn; ++i) vars.push_back(i);
      return elem_sym(VarFamily::Y, rank, vars, n.index);
    }
    case Kind::Add:
      return compile_node(*n.a, ctx) + compile_node(*n.b, ctx);
    case Kind::Sub:
      return compile_node(*n.a, ctx) - compile_node(*n.b, ctx);
    case Kind::Mul:
      return compile_node(*n.a, ctx) * compile_node(*n.b, ctx);
    case Kind::Pow:
      return pow(compile_node(*n.a, ctx), n.exponent);
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

ClassExpr parse_expression(const std::string& text) { return ClassExpr(Parser(text).run()); }

std::string render(const ClassExpr& expr) {
  std::string out;
  render_node(expr.root(), 1, out);
  return out;
}

CompileContext CompileContext::for_space(const SpaceSpec& space) {
  CompileContext ctx;
  ctx.rank = space.g.rank;
  /* Family-A spaces selecting every simple root but one are Grassmannians
     (n = 2 selects nothing and is G(1,2)); their expressions may use
     c-classes.  Expert-mode subsystems carry no simple selection and stay
     conservative. */
  const int n = space.g.rank;
  const bool from_simples = !space.h.simple_selection.empty() || space.h.root_indices.empty();
  if (space.g.family == Family::A && n >= 2 && from_simples &&
      static_cast<int>(space.h.simple_selection.size()) == n - 2) {
    std::vector<bool> chosen(n, false);
    for (int i : space.h.simple_selection) chosen[i] = true;
    for (int k = 1; k <= n - 1; ++k)
      if (!chosen[k]) {
        ctx.blocks = {k, n};
        break;
      }
  }
  return ctx;
}

CompileContext CompileContext::for_grassmannian(const GrassmannSpec& spec) {
  CompileContext ctx;
  ctx.rank = spec.n;
  ctx.blocks = {spec.k, spec.n};
  return ctx;
}

Polynomial compile_expression(const ClassExpr& expr, const CompileContext& ctx) {
  if (ctx.rank <= 0) throw ValidationError("compile context needs a positive rank");
  return compile_node(expr.root(), ctx);
}

}  // namespace weylsum
