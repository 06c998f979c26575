#pragma once

#include <memory>
#include <optional>
#include <string>

#include "weylsum/grassmann.hpp"
#include "weylsum/polynomial.hpp"

namespace weylsum {

/* Characteristic-class expressions:

     expr   := term (("+" | "-") term)*
     term   := factor ("*" factor)*
     factor := base ("^" NAT)?
     base   := RATIONAL | symbol | "(" expr ")"
     symbol := "c" NAT "(" ("S" | "Q") ")"
            |  ("e" | "p") NAT "(" "y[" NAT ".." NAT "]" ")"
            |  "y" NAT
     RATIONAL := ["-"] NAT ["/" NAT]

   There is no unary minus and no division operator; a leading '-' is part
   of a rational literal and only valid where a base may start.  Indices are
   1-based. */
class ClassExpr {
public:
  struct Node;
  using NodePtr = std::unique_ptr<Node>;

  enum class Kind { Literal, Chern, ElemSym, PowerSum, Var, Add, Sub, Mul, Pow };

  struct Node {
    Kind kind;
    Rational lit;           // Literal
    TautBundle bundle = TautBundle::Sub;  // Chern
    int index = 0;          // r of c/e/p, or variable index
    int lo = 0, hi = 0;     // 1-based range bounds for e/p
    unsigned exponent = 0;  // Pow
    NodePtr a, b;
  };

  explicit ClassExpr(NodePtr root) : root_(std::move(root)) {}
  const Node& root() const { return *root_; }

private:
  NodePtr root_;
};

// Throws SyntaxError with a 1-based column on any malformed input.
ClassExpr parse_expression(const std::string& text);

// Canonical text with minimal parentheses; parses back to the same tree.
std::string render(const ClassExpr& expr);

/* Compilation target.  c-classes need the Grassmannian block structure;
   e/p/y need only the rank. */
struct CompileContext {
  int rank = 0;
  std::optional<std::pair<int, int>> blocks;  // (k, n) when present

  static CompileContext for_space(const SpaceSpec& space);
  static CompileContext for_grassmannian(const GrassmannSpec& spec);
};

// Ring homomorphism from expressions to y-polynomials.
Polynomial compile_expression(const ClassExpr& expr, const CompileContext& ctx);

}  // namespace weylsum
