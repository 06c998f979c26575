#include "weylsum/linear_form.hpp"

#include <numeric>

#include "weylsum/errors.hpp"

namespace weylsum {

std::pair<LinearForm, long> LinearForm::normalized(const std::vector<int>& raw) {
  long g = 0;
  int first_nonzero = 0;
  for (int x : raw) {
    if (x != 0 && first_nonzero == 0) first_nonzero = x;
    g = std::gcd(g, static_cast<long>(x < 0 ? -x : x));
  }
  if (g == 0) throw ValidationError("zero linear form");
  long scalar = first_nonzero > 0 ? g : -g;
  std::vector<int> c(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) c[i] = static_cast<int>(raw[i] / scalar);
  return {LinearForm(std::move(c)), scalar};
}

Polynomial LinearForm::to_poly(VarFamily family) const {
  Polynomial p(family, rank());
  for (int i = 0; i < rank(); ++i) {
    if (!coeffs_[i]) continue;
    Exponents e(rank(), 0);
    e[i] = 1;
    p.add_term(e, rational(coeffs_[i]));
  }
  return p;
}

Rational LinearForm::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != rank())
    throw ValidationError("evaluation point has wrong dimension");
  Rational acc(0);
  for (int i = 0; i < rank(); ++i)
    if (coeffs_[i]) acc += rational(coeffs_[i]) * point[i];
  return acc;
}

std::string LinearForm::to_string() const { return to_poly(VarFamily::U).to_string(); }

ScaledForm root_to_linear_form(const Weight& alpha) {
  auto [form, scalar] = LinearForm::normalized(alpha.c);
  return {std::move(form), scalar};
}

FormProduct multiset_union_max(const FormProduct& a, const FormProduct& b) {
  FormProduct out = a;
  for (const auto& [f, m] : b) {
    auto it = out.find(f);
    if (it == out.end())
      out.emplace(f, m);
    else
      it->second = std::max(it->second, m);
  }
  return out;
}

FormProduct multiset_subtract(const FormProduct& a, const FormProduct& b) {
  FormProduct out = a;
  for (const auto& [f, m] : b) {
    auto it = out.find(f);
    if (it == out.end() || it->second < m)
      throw ValidationError("multiset subtraction underflow");
    it->second -= m;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

Polynomial expand(const FormProduct& fp, VarFamily family, int rank) {
  Polynomial out = Polynomial::constant(family, rank, Rational(1));
  for (const auto& [f, m] : fp)
    for (int i = 0; i < m; ++i) out = out * f.to_poly(family);
  return out;
}

std::string to_string(const FormProduct& fp) {
  if (fp.empty()) return "1";
  std::string out;
  for (const auto& [f, m] : fp)
    for (int i = 0; i < m; ++i) out += "(" + f.to_string() + ")";
  return out;
}

Polynomial FactoredLinearProduct::expand(VarFamily family) const {
  return weylsum::expand(forms, family, rank) * scale;
}

std::string FactoredLinearProduct::to_string() const {
  if (scale == 1) return weylsum::to_string(forms);
  if (scale == -1) return "-" + weylsum::to_string(forms);
  return weylsum::to_string(scale) + "*" + weylsum::to_string(forms);
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const LinearForm& d) {
  if (p.rank() != d.rank()) throw ValidationError("linear form rank mismatch");
  if (p.is_zero()) return p;
  // Leading variable of d in the graded-lex order: the first nonzero entry.
  int lead = 0;
  while (d.coeffs()[lead] == 0) ++lead;
  const Rational lead_coeff = rational(d.coeffs()[lead]);
  const Polynomial divisor = d.to_poly(p.family());

  Polynomial quotient(p.family(), p.rank());
  Polynomial rem = p;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    if (e[lead] == 0) return std::nullopt;  // leading term not divisible
    Exponents q = e;
    q[lead] -= 1;
    Polynomial t(p.family(), p.rank());
    t.add_term(q, c / lead_coeff);
    quotient += t;
    rem -= t * divisor;
  }
  return quotient;
}

}  // namespace weylsum
