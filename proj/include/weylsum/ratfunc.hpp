#pragma once

#include <string>
#include <vector>

#include "weylsum/linear_form.hpp"
#include "weylsum/polynomial.hpp"

namespace weylsum {

/* scale * numerator / product(denominator factors), over the equivariant
   parameters.  Denominators stay factored into primitive linear forms;
   addition works over the multiset-max common denominator and cancels
   factors opportunistically.  Zero is {scale 0, numerator 0, empty}. */
class RatFunc {
public:
  static RatFunc zero(int rank);
  static RatFunc from_poly(Polynomial num);
  RatFunc(Rational scale, Polynomial num, FormProduct den);

  int rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }
  const Rational& scale() const { return scale_; }
  const Polynomial& numerator() const { return num_; }
  const FormProduct& denominator() const { return den_; }

  RatFunc operator+(const RatFunc& o) const;

  // Full reduction; throws NotPolynomial with the surviving factors.
  Polynomial to_poly() const;

  // Exact value; throws DenominatorVanishes naming the factor.
  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string() const;

private:
  Rational scale_;
  Polynomial num_;
  FormProduct den_;
};

/* Fold a term list.  threads > 1 folds contiguous slices in parallel and
   combines the partials in slice order; exact arithmetic keeps the value
   identical to the serial fold. */
RatFunc sum_ratfuncs(const std::vector<RatFunc>& terms, int rank, int threads = 1);

}  // namespace weylsum
