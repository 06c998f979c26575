#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylsum/polynomial.hpp"
#include "weylsum/weight.hpp"

namespace weylsum {

/* Primitive integer linear form in the equivariant parameters: content 1,
   first nonzero coefficient positive.  Denominator factors of rational
   functions are stored this way, with compensating scalars kept by the
   holder. */
class LinearForm {
public:
  // Normalizes raw coefficients; returns the form and the scalar s with
  // raw = s * form.  Throws ValidationError on the zero vector.
  static std::pair<LinearForm, long> normalized(const std::vector<int>& raw);

  const std::vector<int>& coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }

  Polynomial to_poly(VarFamily family) const;
  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string() const;

  bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const LinearForm& o) const { return coeffs_ < o.coeffs_; }

private:
  explicit LinearForm(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<int> coeffs_;
};

/* Weight alpha = scalar * form under the chi_i -> u_i identification. */
struct ScaledForm {
  LinearForm form;
  long scalar;
};

ScaledForm root_to_linear_form(const Weight& alpha);

/* Multiset of linear forms with multiplicities (all > 0). */
using FormProduct = std::map<LinearForm, int>;

FormProduct multiset_union_max(const FormProduct& a, const FormProduct& b);
// a must contain b; returns a \ b.
FormProduct multiset_subtract(const FormProduct& a, const FormProduct& b);
Polynomial expand(const FormProduct& fp, VarFamily family, int rank);
std::string to_string(const FormProduct& fp);

/* scale * product of linear forms, kept factored.  The shape Euler classes
   take at fixed points. */
struct FactoredLinearProduct {
  Rational scale;
  FormProduct forms;
  int rank;

  Polynomial expand(VarFamily family) const;
  std::string to_string() const;
};

/* Exact division by a linear form via leading-term elimination in graded-lex
   order; nullopt when a leading term is not divisible (nonzero remainder). */
std::optional<Polynomial> divide_exact(const Polynomial& p, const LinearForm& d);

}  // namespace weylsum
