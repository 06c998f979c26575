#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylsum/rational.hpp"
#include "weylsum/root_system.hpp"

namespace weylsum {

/* Polynomials live in one of two tagged variable families: u1..ul are the
   equivariant parameters, y1..yl the universal bundle classes.  All
   operations require matching family and rank. */
enum class VarFamily { U, Y };

char variable_letter(VarFamily f);

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

/* Graded lexicographic, descending: higher total degree first, ties broken
   lexicographically with u1 > u2 > ...  Map iteration therefore starts at
   the leading term, which the exact-division loop relies on. */
struct GradedLexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

  Polynomial(VarFamily family, int rank) : family_(family), rank_(rank) {}

  static Polynomial constant(VarFamily family, int rank, const Rational& c);
  static Polynomial variable(VarFamily family, int rank, int index0);

  VarFamily family() const { return family_; }
  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Zero polynomial reports degree -1.
  int degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous_of_degree(int d) const;
  std::map<int, Polynomial> homogeneous_components() const;

  void add_term(const Exponents& e, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  // Same coefficients under the other variable family tag.
  Polynomial retagged(VarFamily family) const;

  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string() const;
  // Canonical-order term list: [{"exponents": [...], "coeff": "p/q"}, ...]
  std::string to_json() const;

private:
  VarFamily family_;
  int rank_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/* Variable substitution x_i -> signs[i] * x_{perm[i]}; a ring homomorphism,
   matching the Weyl action on weights. */
Polynomial act(const WeylElement& w, const Polynomial& p);

// Elementary symmetric / power sum over a subset of variables (0-based).
Polynomial elem_sym(VarFamily family, int rank, const std::vector<int>& vars, int r);
Polynomial power_sum(VarFamily family, int rank, const std::vector<int>& vars, int r);

}  // namespace weylsum
