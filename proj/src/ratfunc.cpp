#include "weylsum/ratfunc.hpp"

#include <omp.h>

#include "weylsum/errors.hpp"

namespace weylsum {

RatFunc RatFunc::zero(int rank) {
  return RatFunc(Rational(0), Polynomial(VarFamily::U, rank), {});
}

RatFunc RatFunc::from_poly(Polynomial num) {
  Rational s = num.is_zero() ? Rational(0) : Rational(1);
  return RatFunc(std::move(s), std::move(num), {});
}

RatFunc::RatFunc(Rational scale, Polynomial num, FormProduct den)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.family() != VarFamily::U)
    throw ValidationError("rational functions live in the u-variables");
  if (scale_ == 0 || num_.is_zero()) {
    scale_ = 0;
    num_ = Polynomial(VarFamily::U, num_.rank());
    den_.clear();
    return;
  }
  for (const auto& [f, m] : den_) {
    if (f.rank() != num_.rank()) throw ValidationError("denominator rank mismatch");
    if (m <= 0) throw ValidationError("denominator multiplicity must be positive");
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (rank() != o.rank()) throw ValidationError("rational function rank mismatch");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;

  FormProduct lcd = multiset_union_max(den_, o.den_);
  Polynomial num = num_ * scale_ * expand(multiset_subtract(lcd, den_), VarFamily::U, rank()) +
                   o.num_ * o.scale_ * expand(multiset_subtract(lcd, o.den_), VarFamily::U, rank());
  if (num.is_zero()) return zero(rank());

  // Opportunistic cancellation: strip denominator factors that divide out.
  for (auto it = lcd.begin(); it != lcd.end();) {
    while (it->second > 0) {
      auto q = divide_exact(num, it->first);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? lcd.erase(it) : std::next(it);
  }
  return RatFunc(Rational(1), std::move(num), std::move(lcd));
}

Polynomial RatFunc::to_poly() const {
  if (is_zero()) return Polynomial(VarFamily::U, rank());
  Polynomial num = num_ * scale_;
  FormProduct surviving;
  for (const auto& [f, m] : den_) {
    int left = m;
    while (left > 0) {
      auto q = divide_exact(num, f);
      if (!q) break;
      num = std::move(*q);
      --left;
    }
    if (left > 0) surviving.emplace(f, left);
  }
  if (!surviving.empty())
    throw NotPolynomialError("sum does not reduce to a polynomial; surviving denominator " +
                                 weylsum::to_string(surviving),
                             weylsum::to_string(surviving));
  return num;
}

Rational RatFunc::eval(const std::vector<Rational>& point) const {
  if (is_zero()) return Rational(0);
  Rational acc = scale_ * num_.eval(point);
  for (const auto& [f, m] : den_) {
    Rational v = f.eval(point);
    if (v == 0)
      throw DenominatorVanishesError("denominator factor vanishes at the point: " + f.to_string(),
                                     f.to_string());
    for (int i = 0; i < m; ++i) acc /= v;
  }
  return acc;
}

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (scale_ != 1) out += weylsum::to_string(scale_) + " * ";
  out += "(" + num_.to_string() + ")";
  if (!den_.empty()) out += " / " + weylsum::to_string(den_);
  return out;
}

RatFunc sum_ratfuncs(const std::vector<RatFunc>& terms, int rank, int threads) {
  if (threads > 1 && terms.size() >= 4) {
    const int slices = std::min<int>(threads, static_cast<int>(terms.size()));
    std::vector<RatFunc> partial(slices, RatFunc::zero(rank));
#pragma omp parallel for schedule(static) num_threads(slices)
    for (int s = 0; s < slices; ++s) {
      std::size_t lo = terms.size() * s / slices;
      std::size_t hi = terms.size() * (s + 1) / slices;
      RatFunc acc = RatFunc::zero(rank);
      for (std::size_t i = lo; i < hi; ++i) acc = acc + terms[i];
      partial[s] = std::move(acc);
    }
    RatFunc acc = RatFunc::zero(rank);
    for (auto& p : partial) acc = acc + p;
    return acc;
  }
  RatFunc acc = RatFunc::zero(rank);
  for (const auto& t : terms) acc = acc + t;
  return acc;
}

}  // namespace weylsum
